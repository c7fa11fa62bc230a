use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Target degree list with an even positive sum and every entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<DegreeSequence> {
        if degrees.is_empty() {
            return Err(Error::InvalidSpec("empty degree sequence".into()));
        }
        if let Some(i) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidSpec(format!(
                "degree of node {} is zero",
                i + 1
            )));
        }
        let sum: usize = degrees.iter().sum();
        if !sum.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!("degree sum {sum} is odd")));
        }
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Population variance of the sequence.
    pub fn variance(&self) -> f64 {
        let n = self.n() as f64;
        let mean = self.degrees.iter().sum::<usize>() as f64 / n;
        self.degrees
            .iter()
            .map(|&d| (d as f64 - mean).powi(2))
            .sum::<f64>()
            / n
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        let n = d.len();
        if d[0] >= n {
            return false;
        }
        let mut prefix = 0usize;
        for k in 1..=n {
            prefix += d[k - 1];
            let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
            if prefix > k * (k - 1) + tail {
                return false;
            }
        }
        true
    }
}

/// Outcome of [`realize_degree_sequence`].
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub graph: Graph,
    /// Stub-matching samples rejected before success or fallback.
    pub rejected: usize,
    pub used_fallback: bool,
}

const STUB_ATTEMPTS: usize = 10;

/// Random simple connected graph with exactly the given degrees.
///
/// Tries plain stub matching first; after repeated rejection falls back to a
/// randomized Havel–Hakimi construction shuffled by double-edge swaps, then
/// joins components with swaps that keep every degree.
pub fn realize_degree_sequence<R: Rng>(
    seq: &DegreeSequence,
    max_retries: usize,
    rng: &mut R,
) -> Result<Realization> {
    if !seq.is_graphical() {
        return Err(Error::NotGraphical(format!("{:?}", seq.degrees())));
    }
    let n = seq.n();
    if n > 1 && seq.edge_count() + 1 < n {
        return Err(Error::NotGraphical(
            "too few edges for a connected realization".into(),
        ));
    }
    if max_retries == 0 {
        return Err(Error::Undefined("no realization attempts allowed".into()));
    }
    let stub_budget = STUB_ATTEMPTS.min(max_retries);
    for attempt in 0..stub_budget {
        if let Some(edges) = stub_matching(seq.degrees(), rng) {
            let g = Graph::from_edges(n, edges).expect("stub matching yields valid pairs");
            if g.is_connected() {
                return Ok(Realization {
                    graph: g,
                    rejected: attempt,
                    used_fallback: false,
                });
            }
        }
    }
    let mut edges = havel_hakimi(seq.degrees(), rng)?;
    let swaps = 10 * edges.len();
    shuffle_by_swaps(&mut edges, swaps, rng);
    connect_by_swaps(n, &mut edges, rng)?;
    let graph = Graph::from_edges(n, edges).expect("swaps keep pairs valid");
    debug_assert_eq!(graph.degrees(), seq.degrees());
    Ok(Realization {
        graph,
        rejected: stub_budget,
        used_fallback: true,
    })
}

/// One configuration-model sample; `None` on a self-loop or multi-edge.
fn stub_matching<R: Rng>(degrees: &[usize], rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    stubs.shuffle(rng);
    let mut seen = HashSet::with_capacity(stubs.len() / 2);
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return None;
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return None;
        }
        edges.push(e);
    }
    Some(edges)
}

/// Havel–Hakimi with random tie-breaking among equal residual degrees.
fn havel_hakimi<R: Rng>(degrees: &[usize], rng: &mut R) -> Result<Vec<(usize, usize)>> {
    let n = degrees.len();
    let mut residual: Vec<usize> = degrees.to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    loop {
        order.shuffle(rng);
        // stable sort keeps the random order within equal degrees
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]));
        let v = order[0];
        let d = residual[v];
        if d == 0 {
            break;
        }
        if d >= n || residual[order[d]] == 0 {
            return Err(Error::NotGraphical(format!("{degrees:?}")));
        }
        residual[v] = 0;
        for &u in &order[1..=d] {
            residual[u] -= 1;
            edges.push((u.min(v), u.max(v)));
        }
    }
    Ok(edges)
}

struct EdgeSet {
    edges: Vec<(usize, usize)>,
    present: HashSet<(usize, usize)>,
}

impl EdgeSet {
    fn new(edges: &[(usize, usize)]) -> EdgeSet {
        EdgeSet {
            edges: edges.to_vec(),
            present: edges.iter().copied().collect(),
        }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.present.contains(&(u.min(v), u.max(v)))
    }

    /// Replaces edges `i = (a, b)` and `j = (c, d)` with `(a, d)` and `(c, b)`.
    fn try_swap(&mut self, i: usize, j: usize, flip: bool) -> bool {
        let (a, b) = self.edges[i];
        let (c, d) = if flip {
            (self.edges[j].1, self.edges[j].0)
        } else {
            self.edges[j]
        };
        if a == d || c == b || a == c || b == d || self.has(a, d) || self.has(c, b) {
            return false;
        }
        self.present.remove(&self.edges[i]);
        self.present.remove(&self.edges[j]);
        let e1 = (a.min(d), a.max(d));
        let e2 = (c.min(b), c.max(b));
        self.edges[i] = e1;
        self.edges[j] = e2;
        self.present.insert(e1);
        self.present.insert(e2);
        true
    }
}

fn shuffle_by_swaps<R: Rng>(edges: &mut Vec<(usize, usize)>, attempts: usize, rng: &mut R) {
    if edges.len() < 2 {
        return;
    }
    let mut set = EdgeSet::new(edges);
    for _ in 0..attempts {
        let i = rng.gen_range(0..set.edges.len());
        let j = rng.gen_range(0..set.edges.len());
        if i != j {
            set.try_swap(i, j, rng.gen());
        }
    }
    *edges = set.edges;
}

/// Merges components two at a time: a non-bridge edge `(a, b)` of one
/// component and any edge `(c, d)` of another become `(a, d)`, `(c, b)`.
fn connect_by_swaps<R: Rng>(n: usize, edges: &mut Vec<(usize, usize)>, rng: &mut R) -> Result<()> {
    loop {
        let g = Graph::from_edges(n, edges.iter().copied()).expect("valid pairs");
        let parts = g.connected_components();
        if parts.count() <= 1 {
            return Ok(());
        }
        let bridges: HashSet<_> = g.bridges().into_iter().collect();
        let mut cyclic: Vec<usize> = (0..edges.len())
            .filter(|&i| !bridges.contains(&edges[i]))
            .collect();
        cyclic.shuffle(rng);
        let Some(&i) = cyclic.first() else {
            return Err(Error::NotGraphical(
                "no cycle available to merge components".into(),
            ));
        };
        let home = parts.assignment[edges[i].0];
        let others: Vec<usize> = (0..edges.len())
            .filter(|&j| parts.assignment[edges[j].0] != home)
            .collect();
        let Some(&j) = others.choose(rng) else {
            // remaining components are isolated nodes, impossible with degrees >= 1
            return Err(Error::NotGraphical("isolated node in realization".into()));
        };
        let mut set = EdgeSet::new(edges);
        // endpoints lie in different components, so the swap is always legal
        let swapped = set.try_swap(i, j, rng.gen());
        debug_assert!(swapped);
        *edges = set.edges;
    }
}

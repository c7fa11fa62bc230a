//! Average Network Flow via Gomory-Hu trees.
//!
//! The tree is built with Gusfield's n−1 max-flow construction. Every
//! pairwise maximum flow is then read off the tree with one single-source
//! least-weight traversal per source, and the flows are averaged over all
//! unordered pairs.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::flow::{CapacityMap, FlowNetwork};
use crate::graph::Graph;
use crate::par::Exec;

/// Weighted spanning tree whose path minima are the pairwise max flows.
#[derive(Debug, Clone, PartialEq)]
pub struct GomoryHuTree {
    adj: Vec<Vec<(usize, f64)>>,
    edges: Vec<(usize, usize, f64)>,
}

impl GomoryHuTree {
    /// Builds a tree from explicit weighted edges, checking it spans `0..n`.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<GomoryHuTree> {
        if n == 0 {
            return Err(Error::InvalidTree("empty node set".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges for {n} nodes",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v, w) in &edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidTree(format!("bad edge ({u}, {v})")));
            }
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        let tree = GomoryHuTree { adj, edges };
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(v, _) in &tree.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        if count != n {
            return Err(Error::InvalidTree("edges do not connect all nodes".into()));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adj[v]
    }

    /// Tree path from `s` to `t` as a list of nodes.
    pub fn path(&self, s: usize, t: usize) -> Vec<usize> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if u == t {
                break;
            }
            for &(v, _) in &self.adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        let mut out = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parent[cur];
            out.push(cur);
        }
        out.reverse();
        out
    }

    /// Lightest edge weight on the `s`–`t` tree path.
    pub fn path_min(&self, s: usize, t: usize) -> f64 {
        self.path(s, t)
            .windows(2)
            .map(|w| {
                self.weight(w[0], w[1])
                    .expect("consecutive path nodes are adjacent")
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.adj[u].iter().find(|(x, _)| *x == v).map(|&(_, w)| w)
    }

    /// Edge-list text with a weight column, `u v w`, in the graph's labels.
    pub fn to_edge_list(&self, g: &Graph) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# n={}", g.labels().iter().copied().max().unwrap_or(0));
        for &(u, v, w) in &self.edges {
            let _ = writeln!(out, "{} {} {}", g.label(u), g.label(v), w);
        }
        out
    }
}

/// Dense symmetric table of pairwise maximum flows. The diagonal holds 0.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowMatrix {
    n: usize,
    values: Vec<f64>,
}

impl FlowMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: usize, t: usize) -> f64 {
        self.values[s * self.n + t]
    }

    pub fn row(&self, s: usize) -> &[f64] {
        &self.values[s * self.n..(s + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|s| (0..s).all(|t| self.get(s, t) == self.get(t, s)))
    }

    /// Sum over `s < t`, accumulated row by row in index order.
    pub fn upper_sum(&self) -> f64 {
        let mut total = 0.0;
        for s in 0..self.n {
            for t in s + 1..self.n {
                total += self.get(s, t);
            }
        }
        total
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooSmall {
            required: 2,
            actual: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Gomory-Hu cut tree (Gusfield's contraction-free construction).
pub fn gomory_hu_tree(g: &Graph, cap: &CapacityMap) -> Result<GomoryHuTree> {
    if g.n() == 1 {
        return GomoryHuTree::from_edges(1, Vec::new());
    }
    require_connected(g)?;
    if cap.as_slice().len() != g.m() {
        return Err(Error::CapacityLength {
            expected: g.m(),
            got: cap.as_slice().len(),
        });
    }
    let n = g.n();
    let mut parent = vec![0usize; n];
    let mut weight = vec![0.0f64; n];
    let mut net = FlowNetwork::from_graph(g, cap);
    for s in 1..n {
        let t = parent[s];
        net.reset();
        let value = net.max_flow(s, t);
        let side = net.residual_reachable(s);
        weight[s] = value;
        for i in 0..n {
            if i != s && side[i] && parent[i] == t {
                parent[i] = s;
            }
        }
        if side[parent[t]] {
            parent[s] = parent[t];
            parent[t] = s;
            weight[s] = weight[t];
            weight[t] = value;
        }
    }
    // node 0 stays the root: it is never on the source side of a cut
    let edges = (0..n)
        .filter(|&v| parent[v] != v)
        .map(|v| (v, parent[v], weight[v]))
        .collect();
    let tree = GomoryHuTree::from_edges(n, edges)?;
    #[cfg(debug_assertions)]
    debug_validate(g, cap, &tree);
    Ok(tree)
}

#[cfg(debug_assertions)]
fn debug_validate(g: &Graph, cap: &CapacityMap, tree: &GomoryHuTree) {
    let n = g.n();
    for k in 0..3.min(n - 1) {
        let s = (k * 7919) % n;
        let t = (s + 1 + k * 104_729 % (n - 1)) % n;
        if s == t {
            continue;
        }
        let direct = crate::flow::max_flow(g, cap, s, t)
            .expect("valid pair")
            .value;
        debug_assert!(
            (tree.path_min(s, t) - direct).abs() <= 1e-9 * direct.max(1.0),
            "Gomory-Hu tree disagrees with max flow on ({s}, {t})"
        );
    }
}

/// Single-source least weight: `row[x]` becomes the lightest edge on the tree
/// path `source -> x`. `row[source]` is left untouched.
///
/// Depth-first over the tree with an explicit stack of `(node, parent)`; the
/// root has no parent.
pub fn sslt(tree: &GomoryHuTree, source: usize, row: &mut [f64]) {
    let mut stack: Vec<(usize, Option<usize>)> = vec![(source, None)];
    while let Some((current, parent)) = stack.pop() {
        for &(nbr, w) in tree.neighbors(current) {
            if Some(nbr) == parent {
                continue;
            }
            row[nbr] = if current == source {
                w
            } else {
                w.min(row[current])
            };
            stack.push((nbr, Some(current)));
        }
    }
}

/// All pairwise unit-capacity max flows of a connected graph.
pub fn flow_matrix(g: &Graph) -> Result<FlowMatrix> {
    flow_matrix_with(g, Exec::default())
}

pub fn flow_matrix_with(g: &Graph, exec: Exec) -> Result<FlowMatrix> {
    require_connected(g)?;
    let tree = gomory_hu_tree(g, &CapacityMap::unit(g))?;
    let n = g.n();
    let rows = exec.map_range(n, |s| {
        let mut row = vec![0.0; n];
        sslt(&tree, s, &mut row);
        row[s] = 0.0;
        row
    });
    Ok(FlowMatrix {
        n,
        values: rows.concat(),
    })
}

/// Average Network Flow of a connected graph under unit capacities.
pub fn anf(g: &Graph) -> Result<f64> {
    anf_with(g, Exec::default())
}

pub fn anf_with(g: &Graph, exec: Exec) -> Result<f64> {
    let matrix = flow_matrix_with(g, exec)?;
    let n = g.n() as f64;
    Ok(2.0 * matrix.upper_sum() / n / (n - 1.0))
}

/// Same value as [`anf`] without materializing the n×n matrix.
pub fn anf_streaming(g: &Graph, exec: Exec) -> Result<f64> {
    require_connected(g)?;
    let tree = gomory_hu_tree(g, &CapacityMap::unit(g))?;
    let n = g.n();
    let partial = exec.map_range(n, |s| {
        let mut row = vec![0.0; n];
        sslt(&tree, s, &mut row);
        row[s + 1..].iter().sum::<f64>()
    });
    let total: f64 = partial.iter().sum();
    let n = n as f64;
    Ok(2.0 * total / n / (n - 1.0))
}

/// Reference ANF from one max-flow computation per unordered pair.
pub fn anf_bruteforce(g: &Graph) -> Result<f64> {
    require_connected(g)?;
    let n = g.n();
    let mut net = FlowNetwork::from_graph(g, &CapacityMap::unit(g));
    let mut total = 0.0;
    for s in 0..n {
        for t in s + 1..n {
            net.reset();
            total += net.max_flow(s, t);
        }
    }
    let n = n as f64;
    Ok(2.0 * total / n / (n - 1.0))
}

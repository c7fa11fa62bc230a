//! s–t maximum flow on capacitated undirected graphs and vertex connectivity.
//!
//! Flows are computed with Dinic's blocking-flow algorithm. An undirected edge
//! is a pair of antiparallel arcs sharing one residual pair, so pushing `x`
//! along `u -> v` frees `x` units on `v -> u`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residual values at or below this are treated as saturated.
const EPS: f64 = 1e-12;

/// Per-edge capacities, indexed like [`Graph::edges`].
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityMap {
    capacity: Vec<f64>,
}

impl CapacityMap {
    /// Unit capacity on every edge.
    pub fn unit(g: &Graph) -> CapacityMap {
        CapacityMap {
            capacity: vec![1.0; g.m()],
        }
    }

    pub fn new(g: &Graph, capacity: Vec<f64>) -> Result<CapacityMap> {
        if capacity.len() != g.m() {
            return Err(Error::CapacityLength {
                expected: g.m(),
                got: capacity.len(),
            });
        }
        if let Some((edge, &value)) = capacity
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_finite() || **c < 0.0)
        {
            return Err(Error::NegativeCapacity { edge, value });
        }
        Ok(CapacityMap { capacity })
    }

    pub fn get(&self, edge: usize) -> f64 {
        self.capacity[edge]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.capacity
    }
}

/// Maximum flow with its minimum-cut certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowResult {
    pub value: f64,
    /// Graph edges crossing from `source_side` to the rest.
    pub cut_edges: Vec<(usize, usize)>,
    pub source_side: Vec<bool>,
    /// Net flow on each graph edge in the `u -> v` direction (`u < v`).
    pub edge_flows: Vec<f64>,
}

/// Reusable residual network for repeated max-flow runs on one topology.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<f64>,
    initial: Vec<f64>,
    level: Vec<usize>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            residual: Vec::new(),
            initial: Vec::new(),
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    /// Undirected graph with the given capacities. Arc pair `2e, 2e+1` is edge `e`.
    pub fn from_graph(g: &Graph, cap: &CapacityMap) -> FlowNetwork {
        let mut net = FlowNetwork::new(g.n());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            net.add_undirected(u, v, cap.get(e));
        }
        net
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds a directed arc and its zero-capacity reverse; returns the arc id.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: f64) -> usize {
        self.push_pair(u, v, cap, 0.0)
    }

    /// Adds an undirected edge; returns the id of the `u -> v` arc.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: f64) -> usize {
        self.push_pair(u, v, cap, cap)
    }

    fn push_pair(&mut self, u: usize, v: usize, forward: f64, backward: f64) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.residual.push(forward);
        self.initial.push(forward);
        self.adj[u].push(id);
        self.to.push(u);
        self.residual.push(backward);
        self.initial.push(backward);
        self.adj[v].push(id + 1);
        id
    }

    /// Restores all residual capacities to their initial values.
    pub fn reset(&mut self) {
        self.residual.copy_from_slice(&self.initial);
    }

    /// Flow pushed along arc `arc` relative to its initial state.
    pub fn arc_flow(&self, arc: usize) -> f64 {
        self.initial[arc] - self.residual[arc]
    }

    fn build_levels(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.residual[a] > EPS && self.level[v] == usize::MAX {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn blocking_flow(&mut self, s: usize, t: usize) -> f64 {
        self.cursor.fill(0);
        let mut total = 0.0;
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let push = path
                    .iter()
                    .map(|&a| self.residual[a])
                    .fold(f64::INFINITY, f64::min);
                for &a in &path {
                    self.residual[a] -= push;
                    self.residual[a ^ 1] += push;
                }
                total += push;
                let first_saturated = path
                    .iter()
                    .position(|&a| self.residual[a] <= EPS)
                    .unwrap_or(0);
                path.truncate(first_saturated);
                u = path.last().map_or(s, |&a| self.to[a]);
                continue;
            }
            let mut advanced = false;
            while self.cursor[u] < self.adj[u].len() {
                let a = self.adj[u][self.cursor[u]];
                let v = self.to[a];
                if self.residual[a] > EPS && self.level[v] == self.level[u] + 1 {
                    path.push(a);
                    u = v;
                    advanced = true;
                    break;
                }
                self.cursor[u] += 1;
            }
            if advanced {
                continue;
            }
            // dead end: prune u from the level graph and retreat
            self.level[u] = usize::MAX;
            match path.pop() {
                None => break,
                Some(a) => {
                    u = self.to[a ^ 1];
                    self.cursor[u] += 1;
                }
            }
        }
        total
    }

    /// Maximum `s -> t` flow from the current residual state.
    pub fn max_flow(&mut self, s: usize, t: usize) -> f64 {
        let mut total = 0.0;
        while self.build_levels(s, t) {
            total += self.blocking_flow(s, t);
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.residual[a] > EPS && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Maximum `s`–`t` flow on an undirected capacitated graph.
pub fn max_flow(g: &Graph, cap: &CapacityMap, s: usize, t: usize) -> Result<FlowResult> {
    if s >= g.n() {
        return Err(Error::UnknownNode(s));
    }
    if t >= g.n() {
        return Err(Error::UnknownNode(t));
    }
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    if cap.as_slice().len() != g.m() {
        return Err(Error::CapacityLength {
            expected: g.m(),
            got: cap.as_slice().len(),
        });
    }
    let mut net = FlowNetwork::from_graph(g, cap);
    let value = net.max_flow(s, t);
    let source_side = net.residual_reachable(s);
    let cut_edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| source_side[u] != source_side[v])
        .collect();
    let edge_flows = (0..g.m()).map(|e| net.arc_flow(2 * e)).collect();
    Ok(FlowResult {
        value,
        cut_edges,
        source_side,
        edge_flows,
    })
}

/// Minimum number of edges whose removal disconnects `g` (0 if disconnected).
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut net = FlowNetwork::from_graph(g, &CapacityMap::unit(g));
    let mut best = g.min_degree();
    for t in 1..n {
        net.reset();
        best = best.min(net.max_flow(0, t).round() as usize);
    }
    best
}

/// Node connectivity. Complete graphs give `n - 1`; disconnected graphs give 0.
///
/// Split network: node `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined
/// by a unit arc; each edge gives uncuttable arcs `out(u) -> in(v)` and back.
/// A local vertex cut between non-adjacent `s`, `t` is the max flow from
/// `out(s)` to `in(t)`. Minimizing over a minimum-degree node `v` against its
/// non-neighbors, plus all non-adjacent neighbor pairs of `v`, yields the
/// global value.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let big = n as f64;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1.0);
    }
    for &(u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    let mut local = |s: usize, t: usize| -> usize {
        net.reset();
        net.max_flow(2 * s + 1, 2 * t).round() as usize
    };

    let v = (0..n).min_by_key(|&x| (g.degree(x), x)).unwrap();
    let mut best = g.degree(v);
    for w in 0..n {
        if w != v && !g.has_edge(v, w) {
            best = best.min(local(v, w));
        }
    }
    let nbrs = g.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(local(x, y));
            }
        }
    }
    best
}

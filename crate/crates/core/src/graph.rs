//! Simple undirected graphs.
//!
//! Nodes are stored by dense internal index `0..n`. Every node also carries an
//! external label; graphs read from edge-list files or produced by the
//! generators use labels `1..=n`, and [`Graph::remove_node`] keeps the labels
//! of the surviving nodes. All file I/O is in labels.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Connected components, one id per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub assignment: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Size of the largest component, 0 for the empty graph.
    pub fn largest(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }
}

impl Graph {
    /// Builds a graph on `n` nodes labeled `1..=n`. Duplicate pairs are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownNode(u));
            }
            if v >= n {
                return Err(Error::UnknownNode(v));
            }
            if u == v {
                return Err(Error::SelfLoopEdge(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized((1..=n).collect(), list))
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_normalized((1..=n).collect(), Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_normalized((1..=n).collect(), edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_normalized((1..=n).collect(), edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 nodes");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::from_normalized((1..=n).collect(), edges)
    }

    /// Star on `n` nodes with node index 0 as the hub.
    pub fn star(n: usize) -> Graph {
        let edges = (1..n).map(|v| (0, v)).collect();
        Self::from_normalized((1..=n).collect(), edges)
    }

    fn from_normalized(labels: Vec<usize>, mut edges: Vec<(usize, usize)>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { labels, adj, edges }
    }

    /// Parses the edge-list format: `u v` per line with 1-based ids, `#`
    /// comments, and an optional `# n=<N>` header on the first line.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut pairs = Vec::new();
        let mut max_id = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if line_no == 1 {
                    if let Some(value) = comment.trim().strip_prefix("n=") {
                        let n = value.trim().parse::<usize>().map_err(|_| Error::Parse {
                            line: line_no,
                            message: format!("bad node-count header {value:?}"),
                        })?;
                        declared = Some(n);
                    }
                }
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two node ids, got {line:?}"),
                });
            };
            let parse = |tok: &str| -> Result<usize> {
                match tok.parse::<usize>() {
                    Ok(id) if id >= 1 => Ok(id),
                    _ => Err(Error::Parse {
                        line: line_no,
                        message: format!("node id must be a positive integer, got {tok:?}"),
                    }),
                }
            };
            let (u, v) = (parse(a)?, parse(b)?);
            if u == v {
                return Err(Error::SelfLoop {
                    line: line_no,
                    node: u,
                });
            }
            if let Some(n) = declared {
                if u.max(v) > n {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("node id {} exceeds declared n={n}", u.max(v)),
                    });
                }
            }
            max_id = max_id.max(u).max(v);
            pairs.push((u - 1, v - 1));
        }
        let n = declared.unwrap_or(max_id);
        let edges = pairs
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Ok(Self::from_normalized((1..=n).collect(), edges))
    }

    /// Serializes to the edge-list format, always emitting the `# n=` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let n = self.labels.iter().copied().max().unwrap_or(0);
        let _ = writeln!(out, "# n={n}");
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, sorted; edge ids index into this slice.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn index_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    /// Unordered node pairs without an edge.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy without node `v` and its incident edges; other labels unchanged.
    pub fn remove_node(&self, v: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::UnknownNode(v));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let mut labels = self.labels.clone();
        labels.remove(v);
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Ok(Self::from_normalized(labels, edges))
    }

    /// Copy with edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(Error::SelfLoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        Ok(Self::from_normalized(self.labels.clone(), edges))
    }

    /// Copy with edge `{u, v}` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_node(u)?;
        self.check_node(v)?;
        let Some(idx) = self.edge_index(u, v) else {
            return Err(Error::Undefined(format!("edge {{{u}, {v}}} not present")));
        };
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Self::from_normalized(self.labels.clone(), edges))
    }

    fn check_node(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownNode(v))
        }
    }

    pub fn connected_components(&self) -> ComponentPartition {
        let n = self.n();
        let mut assignment = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if assignment[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            assignment[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &w in &self.adj[u] {
                    if assignment[w] == usize::MAX {
                        assignment[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        ComponentPartition { assignment, sizes }
    }

    /// Connected with at least one node.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components().count() == 1
    }

    /// Hop distances from `source`; `usize::MAX` marks unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Bridge edges (as `(u, v)`, `u < v`), found with an iterative lowpoint DFS.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (node, parent, next neighbor position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (u, parent, pos) = *top;
                if pos < self.adj[u].len() {
                    top.2 += 1;
                    let w = self.adj[u][pos];
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            out.push((parent.min(u), parent.max(u)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

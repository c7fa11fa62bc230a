//! Structural graph properties: degree variance, average shortest path
//! length, average clustering coefficient and degree assortativity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;
use crate::percolation::degree_moments;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub dv: f64,
    /// `None` for disconnected graphs.
    pub aspl: Option<f64>,
    pub acc: f64,
    /// `None` when endpoint degrees have zero variance (e.g. regular graphs).
    pub asco: Option<f64>,
}

pub fn property_report(g: &Graph) -> PropertyReport {
    PropertyReport {
        dv: degree_variance(g),
        aspl: average_shortest_path_length(g).ok(),
        acc: average_clustering_coefficient(g),
        asco: assortativity_coefficient(g),
    }
}

/// Population variance of the degree list, `(n·Σk² − (Σk)²) / n²` evaluated
/// in integers so that graphs with equal `Σk²` get bit-identical values.
pub fn degree_variance(g: &Graph) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    let n = g.n() as u128;
    let s1 = 2 * g.m() as u128;
    let s2: u128 = g.degrees().iter().map(|&d| (d as u128) * (d as u128)).sum();
    (n * s2 - s1 * s1) as f64 / (n * n) as f64
}

/// `⟨k²⟩ - ⟨k⟩²`; equal to [`degree_variance`] up to rounding.
pub fn degree_variance_from_moments(g: &Graph) -> f64 {
    let (k1, k2) = degree_moments(g);
    k2 - k1 * k1
}

pub fn average_shortest_path_length(g: &Graph) -> Result<f64> {
    average_shortest_path_length_with(g, Exec::default())
}

/// Mean hop distance over unordered pairs; BFS sources may run in parallel.
pub fn average_shortest_path_length_with(g: &Graph, exec: Exec) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall {
            required: 2,
            actual: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let per_source = exec.map_range(n, |s| {
        g.bfs_distances(s)[s + 1..]
            .iter()
            .map(|&d| d as u64)
            .sum::<u64>()
    });
    let total: u64 = per_source.iter().sum();
    let pairs = (n * (n - 1) / 2) as f64;
    Ok(total as f64 / pairs)
}

/// Triangles through each node.
pub fn triangle_counts(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut mark = vec![false; n];
    let mut counts = vec![0; n];
    for (v, count) in counts.iter_mut().enumerate() {
        for &u in g.neighbors(v) {
            mark[u] = true;
        }
        let mut t = 0;
        for &u in g.neighbors(v) {
            t += g.neighbors(u).iter().filter(|&&w| mark[w]).count();
        }
        for &u in g.neighbors(v) {
            mark[u] = false;
        }
        *count = t / 2;
    }
    counts
}

/// Mean local clustering, with 0 for nodes of degree below 2.
pub fn average_clustering_coefficient(g: &Graph) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    let tri = triangle_counts(g);
    let sum: f64 = (0..g.n())
        .map(|v| {
            let d = g.degree(v);
            if d < 2 {
                0.0
            } else {
                tri[v] as f64 / (d * (d - 1) / 2) as f64
            }
        })
        .sum();
    sum / g.n() as f64
}

/// Pearson correlation of endpoint degrees over both orientations of every edge.
pub fn assortativity_coefficient(g: &Graph) -> Option<f64> {
    if g.m() == 0 {
        return None;
    }
    // With both orientations the two endpoint series have the same mean and
    // variance, so only the cross term differs.
    let count = 2.0 * g.m() as f64;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut cross = 0.0;
    for &(u, v) in g.edges() {
        let (a, b) = (g.degree(u) as f64, g.degree(v) as f64);
        sum += a + b;
        sum_sq += a * a + b * b;
        cross += 2.0 * a * b;
    }
    let mean = sum / count;
    let var = sum_sq / count - mean * mean;
    if var <= 1e-12 * mean.max(1.0) * mean.max(1.0) {
        return None;
    }
    let r = (cross / count - mean * mean) / var;
    Some(r.clamp(-1.0, 1.0))
}

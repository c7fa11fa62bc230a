//! Percolation metrics: Critical Fraction and the targeted-attack metric R.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Record of an adaptive highest-degree attack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackTrace {
    /// Node indices in removal order.
    pub removal_order: Vec<usize>,
    /// Largest component size after each removal.
    pub lc_sizes: Vec<usize>,
}

impl AttackTrace {
    /// CSV with header `round,removed_node,lc_size`; nodes are written as labels.
    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = String::from("round,removed_node,lc_size\n");
        for (round, (&v, &lc)) in self.removal_order.iter().zip(&self.lc_sizes).enumerate() {
            let _ = writeln!(out, "{},{},{}", round + 1, g.label(v), lc);
        }
        out
    }
}

/// Exact degree moments `(⟨k⟩, ⟨k²⟩)`, each from an integer sum.
pub fn degree_moments(g: &Graph) -> (f64, f64) {
    let n = g.n() as f64;
    let sum: usize = g.degrees().iter().sum();
    let sum_sq: usize = g.degrees().iter().map(|d| d * d).sum();
    (sum as f64 / n, sum_sq as f64 / n)
}

/// `1 - 1 / (⟨k²⟩/⟨k⟩ - 1)`, the large-n closed form applied at finite n.
pub fn critical_fraction(g: &Graph) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::Undefined(
            "critical fraction needs at least one edge".into(),
        ));
    }
    let (k1, k2) = degree_moments(g);
    let kappa = k2 / k1;
    if kappa <= 1.0 {
        return Err(Error::Undefined(format!(
            "critical fraction needs <k^2>/<k> > 1, got {kappa}"
        )));
    }
    Ok(1.0 - 1.0 / (kappa - 1.0))
}

fn largest_alive_component(
    g: &Graph,
    alive: &[bool],
    seen: &mut [bool],
    queue: &mut VecDeque<usize>,
) -> usize {
    seen.fill(false);
    let mut best = 0;
    for start in 0..g.n() {
        if !alive[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(u) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Removes the current highest-degree node each round (ties to the smallest
/// index), recomputing degrees on the surviving graph.
pub fn attack_trace(g: &Graph) -> AttackTrace {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree = g.degrees();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut removal_order = Vec::with_capacity(n);
    let mut lc_sizes = Vec::with_capacity(n);
    for _ in 0..n {
        let target = (0..n)
            .filter(|&v| alive[v])
            .max_by(|&a, &b| degree[a].cmp(&degree[b]).then(b.cmp(&a)))
            .expect("a live node remains");
        alive[target] = false;
        for &w in g.neighbors(target) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        removal_order.push(target);
        lc_sizes.push(largest_alive_component(g, &alive, &mut seen, &mut queue));
    }
    AttackTrace {
        removal_order,
        lc_sizes,
    }
}

/// `(1/n) Σ_i LC(G_i)/n` over all n rounds, the last of which is empty.
pub fn r_metric(g: &Graph) -> f64 {
    r_from_trace(&attack_trace(g), g.n())
}

pub fn r_from_trace(trace: &AttackTrace, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let total: usize = trace.lc_sizes.iter().sum();
    total as f64 / (n as f64 * n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cf_examples() {
        // Petersen graph is 3-regular
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(critical_fraction(&petersen).unwrap(), 0.5);
        assert_eq!(critical_fraction(&Graph::cycle(7)).unwrap(), 0.0);
        assert_eq!(critical_fraction(&Graph::star(4)).unwrap(), 0.0);
        let matching = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            critical_fraction(&matching),
            Err(Error::Undefined(_))
        ));
        assert!(critical_fraction(&Graph::empty(3)).is_err());
    }

    #[test]
    fn r_examples() {
        let k4 = attack_trace(&Graph::complete(4));
        assert_eq!(k4.lc_sizes, vec![3, 2, 1, 0]);
        assert_eq!(k4.removal_order, vec![0, 1, 2, 3]);
        assert_eq!(r_metric(&Graph::complete(4)), 0.375);

        let star = attack_trace(&Graph::star(4));
        assert_eq!(star.removal_order[0], 0);
        assert_eq!(star.lc_sizes, vec![1, 1, 1, 0]);
        assert_eq!(r_metric(&Graph::star(4)), 0.1875);

        assert_eq!(r_metric(&Graph::empty(1)), 0.0);
    }

    #[test]
    fn degrees_recomputed_each_round() {
        // path 0-1-2-3-4: removes 1 (deg 2, smallest id), then 3, then 0
        let trace = attack_trace(&Graph::path(5));
        assert_eq!(trace.removal_order, vec![1, 3, 0, 2, 4]);
        assert_eq!(trace.lc_sizes, vec![3, 1, 1, 1, 0]);
    }

    #[test]
    fn trace_csv() {
        let g = Graph::star(3);
        let csv = attack_trace(&g).to_csv(&g);
        assert_eq!(csv, "round,removed_node,lc_size\n1,1,1\n2,2,1\n3,3,0\n");
    }
}

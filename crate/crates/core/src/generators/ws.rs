use std::collections::BTreeSet;

use rand::Rng;

use super::{collect_indexed, GenSpec, GeneratedGraph, GeneratedSet, GenerationMeta, Model};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

/// Ring lattice with `k` nearest neighbors; each lattice edge `(u, u + j)` is
/// rewired with probability `p` to `(u, w)` for a uniform `w` that is neither
/// `u` nor already adjacent to it. Rewiring keeps the edge count.
pub(crate) fn watts_strogatz<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Graph {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for u in 0..n {
        for j in 1..=k / 2 {
            let v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for j in 1..=k / 2 {
        for u in 0..n {
            if rng.gen::<f64>() >= p {
                continue;
            }
            if adj[u].len() >= n - 1 {
                continue;
            }
            let v = (u + j) % n;
            let mut w = rng.gen_range(0..n);
            while w == u || adj[u].contains(&w) {
                w = rng.gen_range(0..n);
            }
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Graph::from_edges(n, edges).expect("lattice edges are valid")
}

/// Watts–Strogatz graphs with `k = 2m/n`, resampled until connected.
pub fn gen_ws(spec: &GenSpec, exec: Exec) -> Result<GeneratedSet> {
    if spec.model != Model::Ws {
        return Err(Error::InvalidSpec(
            "gen_ws called with a non-WS spec".into(),
        ));
    }
    spec.check_common()?;
    if !(2 * spec.m).is_multiple_of(spec.n) || !(2 * spec.m / spec.n).is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!(
            "WS needs k = 2m/n to be an even integer (n={}, m={})",
            spec.n, spec.m
        )));
    }
    let k = 2 * spec.m / spec.n;
    if k >= spec.n {
        return Err(Error::InvalidSpec(format!(
            "WS lattice degree k={k} must be below n"
        )));
    }
    if !(0.0..=1.0).contains(&spec.ws_rewire_p) {
        return Err(Error::InvalidSpec(format!(
            "rewiring probability {} outside [0, 1]",
            spec.ws_rewire_p
        )));
    }
    let results = exec.map_range(spec.count, |index| {
        let mut rng = spec.rng(index);
        for attempt in 0..spec.max_retries.max(1) {
            let g = watts_strogatz(spec.n, k, spec.ws_rewire_p, &mut rng);
            if g.is_connected() {
                return Ok(GeneratedGraph {
                    graph: g,
                    retries: attempt,
                    target_degrees: None,
                });
            }
        }
        Err(Error::GenerationFailed {
            index,
            attempts: spec.max_retries.max(1),
            reason: "no connected Watts-Strogatz sample".into(),
        })
    });
    let mut meta = GenerationMeta::new(Model::Ws);
    meta.notes.push(format!(
        "ring lattice k={k}, rewiring probability p={}",
        spec.ws_rewire_p
    ));
    Ok(GeneratedSet {
        spec: spec.clone(),
        graphs: collect_indexed(results)?,
        meta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::{average_clustering_coefficient, degree_variance};

    #[test]
    fn pure_lattice_clustering() {
        let mut spec = GenSpec::new(Model::Ws, 200, 800, 1, 5);
        spec.ws_rewire_p = 0.0;
        let g = &gen_ws(&spec, Exec::Sequential).unwrap().graphs[0].graph;
        assert_eq!(degree_variance(g), 0.0);
        assert!(g.degrees().iter().all(|&d| d == 8));
        let k = 8.0;
        let expected = 3.0 * (k - 2.0) / (4.0 * (k - 1.0));
        assert!((average_clustering_coefficient(g) - expected).abs() < 1e-12);
    }

    #[test]
    fn full_rewiring_breaks_regularity() {
        let mut spec = GenSpec::new(Model::Ws, 200, 800, 3, 5);
        spec.ws_rewire_p = 1.0;
        for g in gen_ws(&spec, Exec::Sequential).unwrap().graphs() {
            assert_eq!(g.m(), 800);
            assert!(degree_variance(g) > 0.0);
        }
    }

    #[test]
    fn rejects_odd_lattice_degree() {
        let spec = GenSpec::new(Model::Ws, 10, 15, 1, 0);
        assert!(matches!(
            gen_ws(&spec, Exec::Sequential),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn default_keeps_m() {
        let set = gen_ws(&GenSpec::new(Model::Ws, 200, 800, 10, 7), Exec::Parallel).unwrap();
        for g in set.graphs() {
            assert_eq!((g.n(), g.m()), (200, 800));
            assert!(g.is_connected());
        }
    }
}

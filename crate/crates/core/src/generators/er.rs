use std::collections::HashSet;

use rand::seq::index::sample;
use rand::Rng;

use super::{collect_indexed, GenSpec, GeneratedGraph, GeneratedSet, GenerationMeta, Model};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

/// `m` distinct edges chosen uniformly among all node pairs.
pub(crate) fn random_gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let total = n * (n - 1) / 2;
    let edges: Vec<(usize, usize)> = if 2 * m > total {
        // dense: sample pair indices directly
        sample(rng, total, m)
            .into_iter()
            .map(|k| pair_from_index(n, k))
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(m);
        let mut out = Vec::with_capacity(m);
        while out.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if seen.insert(e) {
                out.push(e);
            }
        }
        out
    };
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

/// Inverse of the row-major enumeration of pairs `u < v`.
fn pair_from_index(n: usize, mut k: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if k < row {
            return (u, u + 1 + k);
        }
        k -= row;
        u += 1;
    }
}

/// G(n, m) graphs, resampled until connected.
pub fn gen_er(spec: &GenSpec, exec: Exec) -> Result<GeneratedSet> {
    if spec.model != Model::Er {
        return Err(Error::InvalidSpec(
            "gen_er called with a non-ER spec".into(),
        ));
    }
    spec.check_common()?;
    let results = exec.map_range(spec.count, |index| {
        let mut rng = spec.rng(index);
        for attempt in 0..spec.max_retries.max(1) {
            let g = random_gnm(spec.n, spec.m, &mut rng);
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
            reason: "no connected G(n, m) sample".into(),
        })
    });
    Ok(GeneratedSet {
        spec: spec.clone(),
        graphs: collect_indexed(results)?,
        meta: GenerationMeta::new(Model::Er),
    })
}

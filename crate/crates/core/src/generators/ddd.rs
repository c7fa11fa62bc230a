//! Graph sets with progressively more heterogeneous degree sequences at fixed
//! `(n, m)`.
//!
//! Node indices `0..n/2` form the left half and `n/2..n` the right half. The
//! first sequence is `d`-regular with `d = 2m/n`. Each following sequence moves
//! `deg_delta = (m - n/2) / count` degree units from random left nodes (never
//! below degree 1) to random right nodes. The divisor is `count` while only
//! `count - 1` moves happen, so the last left half keeps a few units above 1.

use rand::Rng;

use super::{
    collect_indexed, realize_degree_sequence, stream_rng, DegreeSequence, GenSpec, GeneratedGraph,
    GeneratedSet, GenerationMeta, Model,
};
use crate::error::{Error, Result};
use crate::par::Exec;

const SEQUENCE_STREAM: u64 = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct DddPlan {
    pub sequences: Vec<DegreeSequence>,
    pub deg_delta: usize,
    /// Number of move rounds performed, `count - 1`.
    pub moves: usize,
}

fn check_ddd(spec: &GenSpec) -> Result<()> {
    if !spec.n.is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!(
            "n must be even for ddd, got {}",
            spec.n
        )));
    }
    if !(2 * spec.m).is_multiple_of(spec.n) {
        return Err(Error::InvalidSpec(format!(
            "2m must be a multiple of n for ddd (n={}, m={})",
            spec.n, spec.m
        )));
    }
    if spec.count < 2 {
        return Err(Error::InvalidSpec(format!(
            "ddd needs at least 2 graphs, got {}",
            spec.count
        )));
    }
    spec.check_common()
}

/// Target degree sequences for a DDD set.
pub fn ddd_sequences(spec: &GenSpec) -> Result<DddPlan> {
    check_ddd(spec)?;
    let (n, m, count) = (spec.n, spec.m, spec.count);
    let d = 2 * m / n;
    let half = n / 2;
    let deg_delta = (m - half) / count;
    let mut degrees = vec![d; n];
    let mut rng = stream_rng(spec.seed, SEQUENCE_STREAM, 0);
    let mut sequences = vec![DegreeSequence::new(degrees.clone())?];
    for index in 1..count {
        for _ in 0..deg_delta {
            let movable: Vec<usize> = (0..half).filter(|&v| degrees[v] > 1).collect();
            if movable.is_empty() {
                return Err(Error::GenerationFailed {
                    index,
                    attempts: 0,
                    reason: "no left node above degree 1".into(),
                });
            }
            let left = movable[rng.gen_range(0..movable.len())];
            degrees[left] -= 1;
            let right = half + rng.gen_range(0..n - half);
            degrees[right] += 1;
        }
        sequences.push(DegreeSequence::new(degrees.clone())?);
    }
    Ok(DddPlan {
        sequences,
        deg_delta,
        moves: count - 1,
    })
}

/// DDD graph set; sequence `i` is realized on its own stream.
pub fn gen_ddd(spec: &GenSpec, exec: Exec) -> Result<GeneratedSet> {
    if spec.model != Model::Ddd {
        return Err(Error::InvalidSpec(
            "gen_ddd called with a non-DDD spec".into(),
        ));
    }
    let plan = ddd_sequences(spec)?;
    let results = exec.map_range(plan.sequences.len(), |index| {
        let seq = &plan.sequences[index];
        let mut rng = spec.rng(index);
        let real = realize_degree_sequence(seq, spec.max_retries, &mut rng).map_err(|e| {
            Error::GenerationFailed {
                index,
                attempts: spec.max_retries,
                reason: e.to_string(),
            }
        })?;
        Ok(GeneratedGraph {
            graph: real.graph,
            retries: real.rejected,
            target_degrees: Some(seq.degrees().to_vec()),
        })
    });
    let mut meta = GenerationMeta::new(Model::Ddd);
    meta.ddd_deg_delta = Some(plan.deg_delta);
    meta.ddd_moves = Some(plan.moves);
    meta.ddd_divisor = Some(spec.count);
    meta.notes.push(format!(
        "deg_delta = (m - n/2) / count = {} with {} move rounds; left half keeps {} units above degree 1",
        plan.deg_delta,
        plan.moves,
        (spec.m - spec.n / 2) - plan.moves * plan.deg_delta
    ));
    meta.notes
        .push("realizations are forced to be connected".into());
    Ok(GeneratedSet {
        spec: spec.clone(),
        graphs: collect_indexed(results)?,
        meta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::properties::degree_variance;

    #[test]
    fn small_set() {
        let spec = GenSpec::new(Model::Ddd, 4, 4, 2, 3);
        let set = gen_ddd(&spec, Exec::Sequential).unwrap();
        assert_eq!(set.meta.ddd_deg_delta, Some(1));
        assert_eq!(set.graphs[0].graph, Graph::cycle(4));
        let target = set.graphs[1].target_degrees.clone().unwrap();
        let mut sorted = target.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 2, 3]);
        assert_eq!(set.graphs[1].graph.degrees(), target);
        assert!(set.graphs[1].graph.is_connected());
    }

    #[test]
    fn desk_scale_plan() {
        let spec = GenSpec::new(Model::Ddd, 200, 800, 50, 42);
        let plan = ddd_sequences(&spec).unwrap();
        assert_eq!(plan.deg_delta, 14);
        assert_eq!(plan.sequences.len(), 50);
        for pair in plan.sequences.windows(2) {
            assert!(pair[1].variance() > pair[0].variance());
        }
        for s in &plan.sequences {
            assert_eq!(s.edge_count(), 800);
        }
        // 700 movable units, 49 * 14 = 686 moved
        let last = plan.sequences.last().unwrap();
        let left_sum: usize = last.degrees()[..100].iter().sum();
        assert_eq!(left_sum, 100 + 700 - 686);
    }

    #[test]
    fn realized_degrees_are_exact() {
        let spec = GenSpec::new(Model::Ddd, 60, 180, 6, 8);
        let set = gen_ddd(&spec, Exec::Parallel).unwrap();
        for g in &set.graphs {
            assert_eq!(&g.graph.degrees(), g.target_degrees.as_ref().unwrap());
            assert!(g.graph.is_connected());
            let target = DegreeSequence::new(g.target_degrees.clone().unwrap()).unwrap();
            assert!((degree_variance(&g.graph) - target.variance()).abs() < 1e-12);
        }
    }

    #[test]
    fn input_constraints() {
        let odd = GenSpec::new(Model::Ddd, 5, 10, 4, 0);
        assert!(
            matches!(gen_ddd(&odd, Exec::Sequential), Err(Error::InvalidSpec(m)) if m.contains("even"))
        );
        let bad_m = GenSpec::new(Model::Ddd, 6, 10, 4, 0);
        assert!(gen_ddd(&bad_m, Exec::Sequential).is_err());
        let one = GenSpec::new(Model::Ddd, 6, 9, 1, 0);
        assert!(gen_ddd(&one, Exec::Sequential).is_err());
    }
}

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{collect_indexed, GenSpec, GeneratedGraph, GeneratedSet, GenerationMeta, Model};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

/// Preferential attachment from a star seed on `attach + 1` nodes; each new
/// node links to `attach` distinct targets drawn proportionally to degree.
pub(crate) fn preferential_attachment<R: Rng>(
    n: usize,
    attach: usize,
    rng: &mut R,
) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=attach).map(|v| (0, v)).collect();
    // every edge endpoint appears once per incident edge
    let mut repeated: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut targets = HashSet::with_capacity(attach);
    for source in attach + 1..n {
        targets.clear();
        let mut chosen = Vec::with_capacity(attach);
        while chosen.len() < attach {
            let t = repeated[rng.gen_range(0..repeated.len())];
            if targets.insert(t) {
                chosen.push(t);
            }
        }
        for t in chosen {
            edges.push((t, source));
            repeated.push(t);
            repeated.push(source);
        }
    }
    edges
}

/// Adds uniformly random absent edges, or deletes random non-bridge edges,
/// until the graph has exactly `m` edges.
pub(crate) fn adjust_edge_count<R: Rng>(mut g: Graph, m: usize, rng: &mut R) -> Result<Graph> {
    while g.m() < m {
        let n = g.n();
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g = g.add_edge(u, v)?;
        }
    }
    while g.m() > m {
        let bridges: HashSet<_> = g.bridges().into_iter().collect();
        let candidates: Vec<_> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| !bridges.contains(e))
            .collect();
        let Some(&(u, v)) = candidates.choose(rng) else {
            return Err(Error::Undefined(
                "no removable edge keeps the graph connected".into(),
            ));
        };
        g = g.remove_edge(u, v)?;
    }
    Ok(g)
}

/// Barabási–Albert graphs normalized to exactly `spec.m` edges.
pub fn gen_ba(spec: &GenSpec, exec: Exec) -> Result<GeneratedSet> {
    if spec.model != Model::Ba {
        return Err(Error::InvalidSpec(
            "gen_ba called with a non-BA spec".into(),
        ));
    }
    spec.check_common()?;
    let attach = spec.attach();
    if attach == 0 || attach >= spec.n {
        return Err(Error::InvalidSpec(format!(
            "BA attachment {attach} must lie in 1..n (n={})",
            spec.n
        )));
    }
    let results = exec.map_range(spec.count, |index| {
        let mut rng = spec.rng(index);
        let edges = preferential_attachment(spec.n, attach, &mut rng);
        let grown = edges.len();
        let g = Graph::from_edges(spec.n, edges)?;
        let g = adjust_edge_count(g, spec.m, &mut rng).map_err(|e| Error::GenerationFailed {
            index,
            attempts: 1,
            reason: e.to_string(),
        })?;
        Ok((
            GeneratedGraph {
                graph: g,
                retries: 0,
                target_degrees: None,
            },
            grown,
        ))
    });
    let mut grown_counts = Vec::with_capacity(spec.count);
    let results = results
        .into_iter()
        .map(|r| {
            r.map(|(g, grown)| {
                grown_counts.push(grown);
                g
            })
        })
        .collect();
    let mut meta = GenerationMeta::new(Model::Ba);
    meta.ba_attach = Some(attach);
    meta.ba_edges_before_adjustment = grown_counts;
    meta.notes.push(
        "edge count normalized after growth: random absent edges added, or random non-bridge edges removed"
            .into(),
    );
    Ok(GeneratedSet {
        spec: spec.clone(),
        graphs: collect_indexed(results)?,
        meta,
    })
}

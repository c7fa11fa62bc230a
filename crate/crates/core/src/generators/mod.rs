//! Seeded graph generators at fixed node and edge counts.
//!
//! Every graph `i` of a model draws from its own ChaCha stream derived from
//! `(seed, model, i)`, so graphs can be produced concurrently and the output
//! does not depend on scheduling.

mod ba;
mod ddd;
mod degree_sequence;
mod er;
mod ws;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

pub use ba::gen_ba;
pub use ddd::{ddd_sequences, gen_ddd, DddPlan};
pub use degree_sequence::{realize_degree_sequence, DegreeSequence, Realization};
pub use er::gen_er;
pub use ws::gen_ws;

/// Rewiring probability whose n=200, k=8 averages (DV, ACC, ASPL) match the
/// WS reference statistics.
pub const DEFAULT_WS_REWIRE_P: f64 = 0.2;
pub const DEFAULT_MAX_RETRIES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Er,
    Ba,
    Ws,
    Ddd,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Er, Model::Ba, Model::Ws, Model::Ddd];

    pub fn name(self) -> &'static str {
        match self {
            Model::Er => "er",
            Model::Ba => "ba",
            Model::Ws => "ws",
            Model::Ddd => "ddd",
        }
    }

    fn stream_tag(self) -> u64 {
        match self {
            Model::Er => 1,
            Model::Ba => 2,
            Model::Ws => 3,
            Model::Ddd => 4,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Model> {
        match s.to_ascii_lowercase().as_str() {
            "er" => Ok(Model::Er),
            "ba" => Ok(Model::Ba),
            "ws" => Ok(Model::Ws),
            "ddd" => Ok(Model::Ddd),
            other => Err(Error::InvalidSpec(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub m: usize,
    pub count: usize,
    pub seed: u64,
    pub ws_rewire_p: f64,
    /// Edges per arriving node for BA; `None` means `max(1, m / n)`.
    pub ba_attach: Option<usize>,
    pub max_retries: usize,
}

impl GenSpec {
    pub fn new(model: Model, n: usize, m: usize, count: usize, seed: u64) -> GenSpec {
        GenSpec {
            model,
            n,
            m,
            count,
            seed,
            ws_rewire_p: DEFAULT_WS_REWIRE_P,
            ba_attach: None,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn attach(&self) -> usize {
        self.ba_attach.unwrap_or((self.m / self.n.max(1)).max(1))
    }

    /// File name for graph `index` (0-based): `<model>_<n>_<m>_<index>.edges`.
    pub fn file_name(&self, index: usize) -> String {
        format!("{}_{}_{}_{}.edges", self.model, self.n, self.m, index)
    }

    pub(crate) fn rng(&self, index: usize) -> ChaCha8Rng {
        stream_rng(self.seed, self.model.stream_tag(), index as u64)
    }

    pub(crate) fn check_common(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidSpec(format!(
                "n must be at least 2, got {}",
                self.n
            )));
        }
        let max_edges = self.n * (self.n - 1) / 2;
        if self.m > max_edges {
            return Err(Error::InvalidSpec(format!(
                "m={} exceeds the {max_edges} possible edges on n={} nodes",
                self.m, self.n
            )));
        }
        if self.m + 1 < self.n {
            return Err(Error::InvalidSpec(format!(
                "m={} is too small for a connected graph on n={} nodes",
                self.m, self.n
            )));
        }
        Ok(())
    }
}

pub(crate) fn stream_rng(seed: u64, tag: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((tag << 40) | index);
    rng
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedGraph {
    pub graph: Graph,
    /// Attempts used beyond the first.
    pub retries: usize,
    /// Target degree sequence, for DDD graphs.
    pub target_degrees: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenerationMeta {
    pub model: Model,
    pub notes: Vec<String>,
    pub ba_attach: Option<usize>,
    pub ba_edges_before_adjustment: Vec<usize>,
    pub ddd_deg_delta: Option<usize>,
    pub ddd_moves: Option<usize>,
    pub ddd_divisor: Option<usize>,
}

impl GenerationMeta {
    fn new(model: Model) -> GenerationMeta {
        GenerationMeta {
            model,
            notes: Vec::new(),
            ba_attach: None,
            ba_edges_before_adjustment: Vec::new(),
            ddd_deg_delta: None,
            ddd_moves: None,
            ddd_divisor: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedSet {
    pub spec: GenSpec,
    pub graphs: Vec<GeneratedGraph>,
    pub meta: GenerationMeta,
}

impl GeneratedSet {
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.graphs.iter().map(|g| &g.graph)
    }
}

/// Generates `spec.count` graphs of `spec.model`.
pub fn generate(spec: &GenSpec) -> Result<GeneratedSet> {
    generate_with(spec, Exec::default())
}

pub fn generate_with(spec: &GenSpec, exec: Exec) -> Result<GeneratedSet> {
    match spec.model {
        Model::Er => gen_er(spec, exec),
        Model::Ba => gen_ba(spec, exec),
        Model::Ws => gen_ws(spec, exec),
        Model::Ddd => gen_ddd(spec, exec),
    }
}

/// Collects per-index results, surfacing the lowest failing index.
fn collect_indexed(results: Vec<Result<GeneratedGraph>>) -> Result<Vec<GeneratedGraph>> {
    results.into_iter().collect()
}

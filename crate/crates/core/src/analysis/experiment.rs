use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use super::{
    correlation_table, evaluate_graphs, model_average_table, tendency_table, ExperimentResult,
    GraphMeasures, Measure,
};
use crate::error::{Error, Result};
use crate::generators::{
    generate_with, GenSpec, GenerationMeta, Model, DEFAULT_MAX_RETRIES, DEFAULT_WS_REWIRE_P,
};
use crate::par::Exec;
use crate::report::CONVENTIONS;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub m: usize,
    pub count: usize,
    pub seed: u64,
    pub ws_rewire_p: f64,
    pub max_retries: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n: 200,
            m: 800,
            count: 50,
            seed: 42,
            ws_rewire_p: DEFAULT_WS_REWIRE_P,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }
}

impl ExperimentConfig {
    pub fn spec(&self, model: Model) -> GenSpec {
        let mut spec = GenSpec::new(model, self.n, self.m, self.count, self.seed);
        spec.ws_rewire_p = self.ws_rewire_p;
        spec.max_retries = self.max_retries;
        spec
    }
}

/// Evaluated graphs of one model.
#[derive(Debug, Clone)]
pub struct GraphSet {
    pub model: Model,
    pub measures: Vec<GraphMeasures>,
    pub meta: GenerationMeta,
}

impl GraphSet {
    pub fn generate(config: &ExperimentConfig, model: Model, exec: Exec) -> Result<GraphSet> {
        let set = generate_with(&config.spec(model), exec)?;
        Ok(GraphSet {
            model,
            measures: evaluate_graphs(set.graphs(), exec),
            meta: set.meta,
        })
    }

    pub fn label(&self) -> &'static str {
        model_label(self.model)
    }
}

fn model_label(model: Model) -> &'static str {
    match model {
        Model::Ddd => "DDD",
        Model::Ba => "BA",
        Model::Er => "ER",
        Model::Ws => "WS",
    }
}

/// Every table id, in order.
pub const TABLE_IDS: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

/// Parses `1..=10` or `all`.
pub fn parse_tables(arg: &str) -> Result<Vec<u8>> {
    if arg.eq_ignore_ascii_case("all") {
        return Ok(TABLE_IDS.to_vec());
    }
    match arg.parse::<u8>() {
        Ok(id) if TABLE_IDS.contains(&id) => Ok(vec![id]),
        _ => Err(Error::InvalidSpec(format!(
            "table must be 1..10 or \"all\", got {arg:?}"
        ))),
    }
}

fn models_for(table: u8) -> &'static [Model] {
    match table {
        1..=4 => &[Model::Ddd, Model::Ba, Model::Er, Model::Ws],
        5 => &[Model::Ddd],
        6 => &[Model::Ba],
        7 => &[Model::Er],
        8 => &[Model::Ws],
        _ => &[Model::Ba, Model::Er, Model::Ws],
    }
}

/// Generated and evaluated sets plus the tables computed from them.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub config: ExperimentConfig,
    pub sets: Vec<GraphSet>,
    pub results: Vec<ExperimentResult>,
}

impl Experiment {
    pub fn set(&self, model: Model) -> Option<&GraphSet> {
        self.sets.iter().find(|s| s.model == model)
    }

    pub fn table(&self, id: u8) -> Option<&ExperimentResult> {
        let id = format!("table{id}");
        self.results.iter().find(|r| r.table_id == id)
    }
}

/// Generates only the sets the requested tables need, then builds the tables.
pub fn run_experiment(config: &ExperimentConfig, tables: &[u8], exec: Exec) -> Result<Experiment> {
    let mut needed: Vec<Model> = Vec::new();
    for &t in tables {
        for &m in models_for(t) {
            if !needed.contains(&m) {
                needed.push(m);
            }
        }
    }
    // fixed generation order keeps the output independent of the table list
    let order = [Model::Ddd, Model::Ba, Model::Er, Model::Ws];
    let mut sets = Vec::new();
    for model in order.into_iter().filter(|m| needed.contains(m)) {
        sets.push(GraphSet::generate(config, model, exec)?);
    }

    let lookup = |m: Model| sets.iter().find(|s| s.model == m).unwrap();
    let mut results = Vec::new();
    for &t in tables {
        let picked: Vec<&GraphSet> = models_for(t).iter().map(|&m| lookup(m)).collect();
        let named: Vec<(&str, &[GraphMeasures])> = picked
            .iter()
            .map(|s| (s.label(), s.measures.as_slice()))
            .collect();
        let id = format!("table{t}");
        let mut result = match t {
            1..=4 => correlation_table(&id, Measure::PROPERTIES[t as usize - 1], &named),
            5..=8 => tendency_table(&id, named[0].0, named[0].1),
            9 => {
                let mut r = model_average_table(&id, &Measure::ROBUSTNESS, &named);
                r.title = "Mean robustness metrics per graph model".into();
                r
            }
            _ => {
                let mut r = model_average_table(&id, &Measure::PROPERTIES, &named);
                r.title = "Mean structural properties per graph model".into();
                r
            }
        };
        let generation: BTreeMap<&str, &GenerationMeta> =
            picked.iter().map(|s| (s.label(), &s.meta)).collect();
        result.metadata = json!({
            "config": config,
            "conventions": CONVENTIONS,
            "nst_column": "ln(NST)",
            "egr_column": "1 / EGR",
            "generation": generation,
        });
        results.push(result);
    }
    Ok(Experiment {
        config: config.clone(),
        sets,
        results,
    })
}

/// Writes `<table_id>.csv` and `<table_id>.json` for every result.
/// `extra` is merged into each sidecar (e.g. the command-line flags).
pub fn write_results(
    dir: &Path,
    results: &[ExperimentResult],
    extra: &serde_json::Value,
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for r in results {
        fs::write(dir.join(format!("{}.csv", r.table_id)), r.to_csv())?;
        let mut meta = r.metadata_json();
        if let (Some(obj), Some(extra)) = (meta.as_object_mut(), extra.as_object()) {
            for (k, v) in extra {
                obj.insert(k.clone(), v.clone());
            }
        }
        let text = serde_json::to_string_pretty(&meta).map_err(std::io::Error::other)?;
        fs::write(dir.join(format!("{}.json", r.table_id)), text + "\n")?;
    }
    Ok(())
}

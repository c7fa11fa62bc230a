//! `robustnet` command line: generate graph sets, evaluate graphs, correlate
//! measures and rebuild the experiment tables.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    correlation_matrix, evaluate_graphs, parse_tables, run_experiment, write_results,
    ExperimentConfig, ExperimentResult,
};
use crate::generators::{generate_with, GenSpec, Model, DEFAULT_MAX_RETRIES, DEFAULT_WS_REWIRE_P};
use crate::graph::Graph;
use crate::par::{set_threads, Exec};
use crate::properties::property_report;
use crate::report::metric_report;

#[derive(Debug, Clone, Parser, Serialize)]
#[command(
    name = "robustnet",
    version,
    about = "Graph robustness metrics and experiments"
)]
pub struct Cli {
    /// Base seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Output file or directory, depending on the command.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Generate a set of graphs as edge-list files plus manifest.json.
    Gen(GenArgs),
    /// All robustness metrics and properties of one graph.
    Metrics(InputFile),
    /// Structural properties of one graph.
    Props(InputFile),
    /// Spearman matrix over every measure for the graphs in a directory.
    Correlate(InputDir),
    /// Rebuild one or all experiment tables.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: Model,
    #[arg(long)]
    pub nodes: usize,
    #[arg(long)]
    pub edges: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Rewiring probability for WS.
    #[arg(long, default_value_t = DEFAULT_WS_REWIRE_P)]
    pub ws_p: f64,
    /// Edges per arriving node for BA.
    #[arg(long)]
    pub attach: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
    pub max_retries: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct InputFile {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct InputDir {
    /// Directory of `.edges` files, read in file-name order.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ExperimentArgs {
    /// 1..10 or "all".
    #[arg(long, value_parser = parse_table_arg)]
    pub table: TableArg,
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub edges: Option<usize>,
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct TableArg(pub String);

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_table_arg(s: &str) -> Result<TableArg, String> {
    parse_tables(s).map_err(|e| e.to_string())?;
    Ok(TableArg(s.to_string()))
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<()> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        set_threads(t);
    }
    let flags = serde_json::to_value(cli)?;
    match &cli.command {
        Command::Gen(args) => cmd_gen(cli, args, &flags),
        Command::Metrics(args) => {
            let g = read_graph(&args.input)?;
            let report = serde_json::to_value(metric_report(&g))?;
            emit_record(cli, report, &flags)
        }
        Command::Props(args) => {
            let g = read_graph(&args.input)?;
            let mut report = serde_json::to_value(property_report(&g))?;
            report["n"] = json!(g.n());
            report["m"] = json!(g.m());
            emit_record(cli, report, &flags)
        }
        Command::Correlate(args) => cmd_correlate(cli, args, &flags),
        Command::Experiment(args) => cmd_experiment(cli, args, &flags),
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Object(map) if map.contains_key("undefined") => "undefined".into(),
        Value::Null => "undefined".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Single-graph output: JSON object, or `key,value` lines for CSV.
fn emit_record(cli: &Cli, mut report: Value, flags: &Value) -> anyhow::Result<()> {
    let text = match cli.format {
        Format::Json => {
            report["seed"] = json!(cli.seed);
            report["flags"] = flags.clone();
            serde_json::to_string_pretty(&report)? + "\n"
        }
        Format::Csv => {
            let mut s = String::from("key,value\n");
            for (k, v) in report.as_object().into_iter().flatten() {
                if k == "conventions" {
                    continue;
                }
                s.push_str(&format!("{k},{}\n", scalar_text(v)));
            }
            s
        }
    };
    write_or_print(cli.out.as_deref(), &text)
}

fn cmd_gen(cli: &Cli, args: &GenArgs, flags: &Value) -> anyhow::Result<()> {
    let mut spec = GenSpec::new(args.model, args.nodes, args.edges, args.count, cli.seed);
    spec.ws_rewire_p = args.ws_p;
    spec.ba_attach = args.attach;
    spec.max_retries = args.max_retries;
    let set = generate_with(&spec, Exec::Parallel)?;

    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut files = Vec::new();
    for (i, g) in set.graphs.iter().enumerate() {
        let name = spec.file_name(i);
        fs::write(dir.join(&name), g.graph.to_edge_list())?;
        files.push(json!({
            "file": name,
            "index": i,
            "n": g.graph.n(),
            "m": g.graph.m(),
            "retries": g.retries,
        }));
    }
    let manifest = json!({
        "spec": spec,
        "seed": cli.seed,
        "files": files,
        "meta": set.meta,
        "flags": flags,
    });
    fs::write(
        dir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    Ok(())
}

fn cmd_correlate(cli: &Cli, args: &InputDir, flags: &Value) -> anyhow::Result<()> {
    let mut paths: Vec<PathBuf> = fs::read_dir(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "edges"))
        .collect();
    paths.sort();
    if paths.len() < 2 {
        bail!("need at least 2 .edges files in {}", args.input.display());
    }
    let graphs = paths
        .iter()
        .map(|p| read_graph(p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let measures = evaluate_graphs(&graphs, Exec::Parallel);
    let mut result = correlation_matrix("correlation", &measures);
    result.metadata = json!({
        "graphs": paths.iter().map(|p| p.file_name().unwrap().to_string_lossy()).collect::<Vec<_>>(),
        "seed": cli.seed,
        "flags": flags,
    });
    emit_table(cli, &result)
}

fn emit_table(cli: &Cli, result: &ExperimentResult) -> anyhow::Result<()> {
    let text = match cli.format {
        Format::Csv => result.to_csv(),
        Format::Json => serde_json::to_string_pretty(result)? + "\n",
    };
    write_or_print(cli.out.as_deref(), &text)
}

fn cmd_experiment(cli: &Cli, args: &ExperimentArgs, flags: &Value) -> anyhow::Result<()> {
    let tables = parse_tables(&args.table.0)?;
    let defaults = ExperimentConfig::default();
    let config = ExperimentConfig {
        n: args.nodes.unwrap_or(defaults.n),
        m: args.edges.unwrap_or(defaults.m),
        count: args.count.unwrap_or(defaults.count),
        seed: cli.seed,
        ..defaults
    };
    let exp = run_experiment(&config, &tables, Exec::Parallel)?;
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    write_results(
        &dir,
        &exp.results,
        &json!({ "seed": cli.seed, "flags": flags }),
    )
    .with_context(|| format!("writing tables to {}", dir.display()))?;
    for r in &exp.results {
        eprintln!(
            "wrote {}",
            dir.join(format!("{}.csv", r.table_id)).display()
        );
    }
    Ok(())
}

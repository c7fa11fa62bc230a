//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed.

mod common;

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use robustnet::analysis::{run_experiment, spearman, ExperimentConfig, Measure};
use robustnet::anf::{anf_bruteforce, flow_matrix, gomory_hu_tree};
use robustnet::flow::{max_flow, CapacityMap};
use robustnet::generators::{generate_with, GenSpec, Model};
use robustnet::spectral::{effective_graph_resistance, log_nst};
use robustnet::{anf, metric_report, Exec, Graph, MetricValue};

use common::{egr_pseudoinverse, random_connected, random_graph, rng, spanning_trees_bruteforce};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, budget_secs: u64) -> bool {
    elapsed < Duration::from_secs(budget_secs)
}

fn anf_oracle() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let n = r.gen_range(4..=30);
        let m = r.gen_range(n - 1..=(3 * n).min(n * (n - 1) / 2));
        let g = random_connected(n, m, &mut r);
        worst = worst.max((anf(&g).unwrap() - anf_bruteforce(&g).unwrap()).abs());
    }
    let t = start.elapsed();
    outcome(
        worst <= 1e-12 && within(t, 30),
        format!("200 graphs, max |diff| {worst:e}, {:.2?}", t),
    )
}

fn cut_tree_pairs() -> Outcome {
    let start = Instant::now();
    let mut r = rng(2);
    let mut mismatches = 0;
    let mut pairs = 0;
    for _ in 0..50 {
        let n = r.gen_range(2..=12);
        let m = r.gen_range(n - 1..=n * (n - 1) / 2);
        let g = random_connected(n, m, &mut r);
        let cap = CapacityMap::unit(&g);
        let tree = gomory_hu_tree(&g, &cap).unwrap();
        for s in 0..n {
            for t in s + 1..n {
                pairs += 1;
                if tree.path_min(s, t) != max_flow(&g, &cap, s, t).unwrap().value {
                    mismatches += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        mismatches == 0 && within(t, 10),
        format!("{pairs} pairs, {mismatches} mismatches, {:.2?}", t),
    )
}

fn edge_addition() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    let mut strict = 0;
    let mut exact_step = 0;
    for _ in 0..100 {
        let n = r.gen_range(4..=30);
        let max_m = n * (n - 1) / 2 - 1;
        let m = r.gen_range(n - 1..=(3 * n).min(max_m));
        let g = random_connected(n, m, &mut r);
        let &(u, v) = g.non_edges().choose(&mut r).unwrap();
        let h = g.add_edge(u, v).unwrap();
        if anf(&h).unwrap() > anf(&g).unwrap() {
            strict += 1;
        }
        let (before, after) = (flow_matrix(&g).unwrap(), flow_matrix(&h).unwrap());
        if after.get(u, v) == before.get(u, v) + 1.0 {
            exact_step += 1;
        }
    }
    let t = start.elapsed();
    outcome(
        strict == 100 && exact_step == 100 && within(t, 20),
        format!(
            "strict increase {strict}/100, pair flow +1 {exact_step}/100, {:.2?}",
            t
        ),
    )
}

fn fixtures() -> Outcome {
    let close =
        |v: &MetricValue, want: f64, tol: f64| v.value().is_some_and(|x| (x - want).abs() <= tol);
    let exact = |v: &MetricValue, want: f64| v.value() == Some(want);
    let k4 = metric_report(&Graph::complete(4));
    let c4 = metric_report(&Graph::cycle(4));
    let checks = [
        ("K4 anf", exact(&k4.anf, 3.0)),
        ("K4 node_connectivity", exact(&k4.node_connectivity, 3.0)),
        ("K4 ac", close(&k4.ac, 4.0, 1e-9)),
        ("K4 log_nst", close(&k4.log_nst, 16f64.ln(), 1e-9)),
        (
            "K4 reciprocal_egr",
            close(&k4.reciprocal_egr, 1.0 / 3.0, 1e-9),
        ),
        ("K4 nat_c", close(&k4.nat_c, 1.6673, 1e-3)),
        ("K4 cf", exact(&k4.cf, 0.5)),
        ("K4 r", exact(&k4.r, 0.375)),
        ("C4 anf", exact(&c4.anf, 2.0)),
        ("C4 ac", close(&c4.ac, 2.0, 1e-9)),
        ("C4 log_nst", close(&c4.log_nst, 4f64.ln(), 1e-9)),
        ("C4 reciprocal_egr", close(&c4.reciprocal_egr, 0.2, 1e-9)),
        ("C4 aspl", close(&c4.aspl, 4.0 / 3.0, 1e-12)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} fixture values", checks.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    )
}

fn desk_config(seed: u64) -> ExperimentConfig {
    ExperimentConfig {
        seed,
        ..ExperimentConfig::default()
    }
}

struct DeskRun {
    exp: robustnet::analysis::Experiment,
    elapsed: Duration,
}

fn dv_cf_exact(exp: &DeskRun, extra: &[(String, f64)]) -> Outcome {
    let t1 = exp.exp.table(1).unwrap();
    let mut bad: Vec<String> = t1
        .columns
        .iter()
        .filter(|c| t1.cell("CF", c) != Some(1.0))
        .cloned()
        .collect();
    bad.extend(
        extra
            .iter()
            .filter(|(_, v)| *v != 1.0)
            .map(|(k, _)| k.clone()),
    );
    outcome(
        bad.is_empty(),
        format!(
            "{} sets exactly 1.0{}",
            t1.columns.len() + extra.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!(", not exact: {}", bad.join(", "))
            }
        ),
    )
}

fn ddd_dv_row(run: &DeskRun) -> Outcome {
    let t1 = run.exp.table(1).unwrap();
    let get = |row: &str| t1.cell(row, "DDD").unwrap_or(f64::NAN);
    let neg = ["ANF", "NST", "EGR", "R"];
    let neg_ok = neg.iter().all(|r| get(r) <= -0.95);
    let natc = get("NatC");
    let detail = format!(
        "ANF {:.4} NST {:.4} EGR {:.4} R {:.4} NatC {:.4}, {:.2?}",
        get("ANF"),
        get("NST"),
        get("EGR"),
        get("R"),
        natc,
        run.elapsed
    );
    outcome(neg_ok && natc >= 0.95 && within(run.elapsed, 300), detail)
}

fn ddd_tendency(run: &DeskRun) -> Outcome {
    let t5 = run.exp.table(5).unwrap();
    let mut violations = Vec::new();
    for row in &t5.rows {
        let (cf, r) = (t5.cell(row, "CF"), t5.cell(row, "R"));
        match (cf, r) {
            (Some(cf), Some(r)) if cf.signum() == -r.signum() && cf != 0.0 && r != 0.0 => {}
            _ => violations.push(row.clone()),
        }
    }
    let anf_r = t5.cell("ANF", "R").unwrap_or(f64::NAN);
    outcome(
        violations.is_empty() && anf_r >= 0.95,
        format!(
            "opposite signs on {}/{} metrics, rho(ANF, R) {anf_r:.4}",
            t5.rows.len() - violations.len(),
            t5.rows.len()
        ),
    )
}

/// Model-average orderings for one seed; also returns the DV/CF Spearman on each model set.
fn model_orderings(seed: u64) -> (bool, Vec<(String, f64)>) {
    let exp = run_experiment(&desk_config(seed), &[9, 10], Exec::Parallel).unwrap();
    let t9 = exp.table(9).unwrap();
    let t10 = exp.table(10).unwrap();
    let m9 = |row: &str, col: &str| t9.cell(row, col).unwrap();
    let m10 = |row: &str, col: &str| t10.cell(row, col).unwrap();
    let highest_ba = |row: &str| m9(row, "BA") > m9(row, "ER") && m9(row, "BA") > m9(row, "WS");
    let ok = m9("ANF", "WS") > m9("ANF", "ER")
        && m9("ANF", "ER") > m9("ANF", "BA")
        && highest_ba("CF")
        && highest_ba("AC")
        && highest_ba("NatC")
        && m10("DV", "BA") > m10("DV", "ER")
        && m10("DV", "ER") > m10("DV", "WS")
        && m10("ACC", "WS") > m10("ACC", "ER")
        && m10("ACC", "WS") > m10("ACC", "BA");
    let dv_cf = exp
        .sets
        .iter()
        .map(|s| {
            let col = |m: Measure| {
                s.measures
                    .iter()
                    .map(|g| g.get(m).unwrap())
                    .collect::<Vec<_>>()
            };
            let rho = spearman(&col(Measure::Dv), &col(Measure::Cf)).unwrap_or(f64::NAN);
            (format!("{}@seed{seed}", s.label()), rho)
        })
        .collect();
    (ok, dv_cf)
}

fn anf_budget() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (n, m, budget) in [(200, 800, 2), (2000, 8000, 60)] {
        let set = generate_with(&GenSpec::new(Model::Er, n, m, 1, 9), Exec::Parallel).unwrap();
        let g = &set.graphs[0].graph;
        let start = Instant::now();
        let value = anf(g).unwrap();
        let t = start.elapsed();
        pass &= within(t, budget);
        details.push(format!("n={n}: {t:.2?} (anf {value:.4})"));
    }
    outcome(pass, details.join(", "))
}

fn spectral_cross_checks() -> Outcome {
    let start = Instant::now();
    let mut r = rng(10);
    let mut nst_checked = 0;
    let mut nst_bad = 0;
    for n in 2..=7 {
        let mut sampled = 0;
        while sampled < 100 {
            let g = random_graph(n, r.gen_range(0.3..1.0), &mut r);
            if !g.is_connected() {
                continue;
            }
            sampled += 1;
            let exact = spanning_trees_bruteforce(&g) as f64;
            if (log_nst(&g).unwrap() - exact.ln()).abs() > 1e-9 {
                nst_bad += 1;
            }
        }
        nst_checked += sampled;
    }
    let mut worst_egr: f64 = 0.0;
    for _ in 0..100 {
        let n = r.gen_range(2..=10);
        let m = r.gen_range(n - 1..=n * (n - 1) / 2);
        let g = random_connected(n, m, &mut r);
        worst_egr =
            worst_egr.max((effective_graph_resistance(&g).unwrap() - egr_pseudoinverse(&g)).abs());
    }
    outcome(
        nst_bad == 0 && worst_egr <= 1e-6,
        format!(
            "ln NST exact on {nst_checked} graphs ({nst_bad} off), EGR max diff {worst_egr:e}, {:.2?}",
            start.elapsed()
        ),
    )
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_robustnet");
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let start = Instant::now();
    for d in &dirs {
        let status = Command::new(bin)
            .args(["--seed", "42", "--out"])
            .arg(d.path())
            .args(["experiment", "--table", "all"])
            .output()
            .expect("run robustnet");
        if !status.status.success() {
            return outcome(
                false,
                format!(
                    "exit {:?}: {}",
                    status.status,
                    String::from_utf8_lossy(&status.stderr)
                ),
            );
        }
    }
    let read = |p: &Path, id: usize| std::fs::read(p.join(format!("table{id}.csv"))).ok();
    let differing: Vec<usize> = (1..=10)
        .filter(|&id| {
            let a = read(dirs[0].path(), id);
            a.is_none() || a != read(dirs[1].path(), id)
        })
        .collect();
    outcome(
        differing.is_empty(),
        format!(
            "10 tables compared, {} differ, {:.2?}",
            differing.len(),
            start.elapsed()
        ),
    )
}

fn main() -> ExitCode {
    let mut failures = 0;
    let mut report = |id: u32, name: &str, o: Outcome| {
        println!(
            "criterion {id:>2} {}  {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failures += 1;
        }
    };

    report(1, "ANF equals brute-force all-pairs max flow", anf_oracle());
    report(
        2,
        "cut-tree path minima equal pairwise max flow",
        cut_tree_pairs(),
    );
    report(
        3,
        "adding a missing edge strictly increases ANF",
        edge_addition(),
    );
    report(4, "K4 and C4 closed-form values", fixtures());

    let start = Instant::now();
    let exp = run_experiment(&desk_config(42), &[1, 5], Exec::Parallel).unwrap();
    let desk = DeskRun {
        exp,
        elapsed: start.elapsed(),
    };

    let start = Instant::now();
    let mut orderings_held = 0;
    let mut dv_cf = Vec::new();
    for seed in 1..=10 {
        let (ok, cells) = model_orderings(seed);
        orderings_held += ok as usize;
        dv_cf.extend(cells);
    }
    let orderings_time = start.elapsed();

    report(
        5,
        "Spearman(DV, CF) is exactly 1 on every set",
        dv_cf_exact(&desk, &dv_cf),
    );
    report(
        6,
        "DDD correlations of DV with ANF, NST, EGR, R, NatC",
        ddd_dv_row(&desk),
    );
    report(
        7,
        "DDD metrics correlate oppositely with CF and R",
        ddd_tendency(&desk),
    );
    report(
        8,
        "model-average orderings across 10 seeds",
        outcome(
            orderings_held >= 9,
            format!("held for {orderings_held}/10 seeds, {orderings_time:.2?}"),
        ),
    );
    report(9, "ANF runtime budget", anf_budget());
    report(
        10,
        "spectral metrics against independent oracles",
        spectral_cross_checks(),
    );
    report(
        11,
        "experiment CSVs are byte-identical across runs",
        cli_determinism(),
    );

    if failures == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}

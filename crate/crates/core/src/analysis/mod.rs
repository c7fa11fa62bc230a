//! Rank correlation and the experiment tables built on it.

mod experiment;
mod spearman;
mod tables;

use serde::Serialize;

use crate::graph::Graph;
use crate::par::Exec;
use crate::report::{metric_report_with, MetricReport};

pub use experiment::{
    parse_tables, run_experiment, write_results, Experiment, ExperimentConfig, GraphSet, TABLE_IDS,
};
pub use spearman::{pearson, spearman, spearman_pairwise, RankedSeries};
pub use tables::{
    correlation_matrix, correlation_table, model_average_table, tendency_table, ExperimentResult,
};

/// Quantities compared across graph sets. NST enters as `ln(NST)` and EGR as
/// its reciprocal so that larger always means more robust.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Measure {
    NodeC,
    Cf,
    Ac,
    NatC,
    Nst,
    Egr,
    R,
    Anf,
    Dv,
    Aspl,
    Acc,
    Asco,
}

impl Measure {
    pub const ROBUSTNESS: [Measure; 8] = [
        Measure::NodeC,
        Measure::Cf,
        Measure::Ac,
        Measure::NatC,
        Measure::Nst,
        Measure::Egr,
        Measure::R,
        Measure::Anf,
    ];

    pub const PROPERTIES: [Measure; 4] = [Measure::Dv, Measure::Aspl, Measure::Acc, Measure::Asco];

    pub const ALL: [Measure; 12] = [
        Measure::NodeC,
        Measure::Cf,
        Measure::Ac,
        Measure::NatC,
        Measure::Nst,
        Measure::Egr,
        Measure::R,
        Measure::Anf,
        Measure::Dv,
        Measure::Aspl,
        Measure::Acc,
        Measure::Asco,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Measure::NodeC => "NodeC",
            Measure::Cf => "CF",
            Measure::Ac => "AC",
            Measure::NatC => "NatC",
            Measure::Nst => "NST",
            Measure::Egr => "EGR",
            Measure::R => "R",
            Measure::Anf => "ANF",
            Measure::Dv => "DV",
            Measure::Aspl => "ASPL",
            Measure::Acc => "ACC",
            Measure::Asco => "AsCo",
        }
    }

    fn slot(self) -> usize {
        Measure::ALL.iter().position(|&m| m == self).unwrap()
    }
}

/// One graph's measures; `None` marks an undefined value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphMeasures {
    values: [Option<f64>; 12],
}

impl GraphMeasures {
    pub fn from_report(r: &MetricReport) -> GraphMeasures {
        let mut values = [None; 12];
        let mut put = |m: Measure, v: Option<f64>| values[m.slot()] = v;
        put(Measure::NodeC, r.node_connectivity.value());
        put(Measure::Cf, r.cf.value());
        put(Measure::Ac, r.ac.value());
        put(Measure::NatC, r.nat_c.value());
        put(Measure::Nst, r.log_nst.value());
        put(Measure::Egr, r.reciprocal_egr.value());
        put(Measure::R, r.r.value());
        put(Measure::Anf, r.anf.value());
        put(Measure::Dv, r.dv.value());
        put(Measure::Aspl, r.aspl.value());
        put(Measure::Acc, r.acc.value());
        put(Measure::Asco, r.asco.value());
        GraphMeasures { values }
    }

    pub fn get(&self, m: Measure) -> Option<f64> {
        self.values[m.slot()]
    }
}

/// Measures for every graph, evaluated concurrently and returned in order.
pub fn evaluate_graphs<'a, I>(graphs: I, exec: Exec) -> Vec<GraphMeasures>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let graphs: Vec<&Graph> = graphs.into_iter().collect();
    exec.map_slice(&graphs, |g| {
        GraphMeasures::from_report(&metric_report_with(g, Exec::Sequential))
    })
}

/// Column of one measure across a set.
pub fn column(set: &[GraphMeasures], m: Measure) -> Vec<Option<f64>> {
    set.iter().map(|g| g.get(m)).collect()
}

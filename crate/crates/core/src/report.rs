//! Every metric and property of one graph, with undefined values kept
//! explicit instead of being folded into NaN or 0.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::anf::anf_with;
use crate::error::Error;
use crate::flow::vertex_connectivity;
use crate::graph::Graph;
use crate::par::Exec;
use crate::percolation::{critical_fraction, r_metric};
use crate::properties::{
    assortativity_coefficient, average_clustering_coefficient, average_shortest_path_length_with,
    degree_variance,
};
use crate::spectral::{
    algebraic_connectivity, effective_graph_resistance, log_nst, natural_connectivity,
};

/// A metric value, or the reason it does not exist for this graph.
#[derive(Debug, Clone, PartialEq)]
pub enum MetricValue {
    Value(f64),
    Undefined(String),
}

impl MetricValue {
    pub fn value(&self) -> Option<f64> {
        match self {
            MetricValue::Value(v) => Some(*v),
            MetricValue::Undefined(_) => None,
        }
    }

    fn from_result(r: Result<f64, Error>) -> MetricValue {
        match r {
            Ok(v) => MetricValue::Value(v),
            Err(Error::Disconnected) => MetricValue::Undefined("disconnected".into()),
            Err(e) => MetricValue::Undefined(e.to_string()),
        }
    }
}

impl Serialize for MetricValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MetricValue::Value(v) => s.serialize_f64(*v),
            MetricValue::Undefined(reason) => {
                let mut map = s.serialize_map(Some(1))?;
                map.serialize_entry("undefined", reason)?;
                map.end()
            }
        }
    }
}

/// Conventions applied by [`metric_report`]; serialized with every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conventions {
    pub capacities: &'static str,
    pub nst: &'static str,
    pub egr: &'static str,
    pub attack: &'static str,
    pub acc: &'static str,
    pub asco: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    capacities: "unit capacity on every edge for anf",
    nst: "log_nst is the natural log of the spanning tree count",
    egr: "reciprocal_egr = 1 / egr",
    attack: "adaptive highest-degree removal, ties to smallest node id, all n rounds counted",
    acc: "mean local clustering, 0 for degree < 2",
    asco: "Pearson over both orientations of each edge; undefined for zero degree variance",
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricReport {
    pub n: usize,
    pub m: usize,
    pub anf: MetricValue,
    pub node_connectivity: MetricValue,
    pub cf: MetricValue,
    pub ac: MetricValue,
    pub nat_c: MetricValue,
    pub log_nst: MetricValue,
    pub egr: MetricValue,
    pub reciprocal_egr: MetricValue,
    pub r: MetricValue,
    pub dv: MetricValue,
    pub aspl: MetricValue,
    pub acc: MetricValue,
    pub asco: MetricValue,
    pub conventions: Conventions,
}

pub fn metric_report(g: &Graph) -> MetricReport {
    metric_report_with(g, Exec::default())
}

pub fn metric_report_with(g: &Graph, exec: Exec) -> MetricReport {
    let connected = g.is_connected();
    let node_connectivity = if g.n() < 2 {
        MetricValue::Undefined("needs at least 2 nodes".into())
    } else if !connected {
        MetricValue::Undefined("disconnected".into())
    } else {
        MetricValue::Value(vertex_connectivity(g) as f64)
    };
    let egr = MetricValue::from_result(effective_graph_resistance(g));
    let reciprocal_egr = match &egr {
        MetricValue::Value(v) => MetricValue::Value(1.0 / v),
        undefined => undefined.clone(),
    };
    let r = if g.n() == 0 {
        MetricValue::Undefined("empty graph".into())
    } else {
        MetricValue::Value(r_metric(g))
    };
    let asco = match assortativity_coefficient(g) {
        Some(v) => MetricValue::Value(v),
        None => MetricValue::Undefined("zero variance in endpoint degrees".into()),
    };
    MetricReport {
        n: g.n(),
        m: g.m(),
        anf: MetricValue::from_result(anf_with(g, exec)),
        node_connectivity,
        cf: MetricValue::from_result(critical_fraction(g)),
        ac: MetricValue::from_result(algebraic_connectivity(g)),
        nat_c: MetricValue::from_result(natural_connectivity(g)),
        log_nst: MetricValue::from_result(log_nst(g)),
        egr,
        reciprocal_egr,
        r,
        dv: MetricValue::Value(degree_variance(g)),
        aspl: MetricValue::from_result(average_shortest_path_length_with(g, exec)),
        acc: MetricValue::Value(average_clustering_coefficient(g)),
        asco,
        conventions: CONVENTIONS,
    }
}

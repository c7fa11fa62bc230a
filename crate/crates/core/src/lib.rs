//! Network robustness measures built around Average Network Flow (ANF), the
//! mean pairwise maximum flow, computed from a Gomory-Hu cut tree.
//!
//! Alongside ANF the crate provides the spectral and percolation metrics it is
//! usually compared with, structural properties, seeded graph generators and
//! the rank-correlation harness that ties them together.
//!
//! ```
//! use robustnet::{anf, Graph};
//!
//! let k4 = Graph::complete(4);
//! assert_eq!(anf(&k4).unwrap(), 3.0);
//! ```

pub mod analysis;
pub mod anf;
pub mod cli;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod par;
pub mod percolation;
pub mod properties;
pub mod report;
pub mod spectral;

pub use anf::{anf, anf_bruteforce, flow_matrix, gomory_hu_tree, FlowMatrix, GomoryHuTree};
pub use error::{Error, Result};
pub use flow::{edge_connectivity, max_flow, vertex_connectivity, CapacityMap, FlowResult};
pub use graph::Graph;
pub use par::Exec;
pub use report::{metric_report, MetricReport, MetricValue};

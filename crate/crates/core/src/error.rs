use thiserror::Error;

/// Errors produced by graph construction, metric evaluation and generation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on node {node}")]
    SelfLoop { line: usize, node: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node {0} is not in the graph")]
    UnknownNode(usize),

    #[error("edge {{{0}, {1}}} already present")]
    DuplicateEdge(usize, usize),

    #[error("self-loop {{{0}, {0}}} is not allowed in a simple graph")]
    SelfLoopEdge(usize),

    #[error("source and sink must differ (both are {0})")]
    SameEndpoints(usize),

    #[error("negative capacity {value} on edge {edge}")]
    NegativeCapacity { edge: usize, value: f64 },

    #[error("capacity map has {got} entries but the graph has {expected} edges")]
    CapacityLength { expected: usize, got: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph needs at least {required} nodes, has {actual}")]
    TooSmall { required: usize, actual: usize },

    #[error("metric undefined: {0}")]
    Undefined(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("degree sequence is not graphical: {0}")]
    NotGraphical(String),

    #[error("generation of graph {index} failed after {attempts} attempts: {reason}")]
    GenerationFailed {
        index: usize,
        attempts: usize,
        reason: String,
    },

    #[error("series lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;

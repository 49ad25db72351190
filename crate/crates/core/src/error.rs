use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is not in a graph on {n} vertices")]
    UnknownVertex { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameter {name} = {value} is invalid: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: String,
    },
}

#[derive(Debug, Error)]
pub enum DensityError {
    #[error("exhaustive enumeration is capped at {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("potential parameters must be positive, got ({a}, {b})")]
    InvalidParams { a: i64, b: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("search timed out")]
    Timeout,
    #[error("{what} is capped at {cap}, got {got}")]
    SizeCap {
        what: &'static str,
        cap: usize,
        got: usize,
    },
    #[error("list assignment is missing or empty at vertex {0}")]
    EmptyList(Vertex),
}

#[derive(Debug, Error)]
pub enum DischargeError {
    #[error("c must be at least 2, got {0}")]
    InvalidC(i64),
    #[error("vertex {vertex} has degree {degree}, surgery needs a 3-vertex")]
    NotThreeVertex { vertex: Vertex, degree: usize },
    #[error("audit hypothesis failed: {0}")]
    Precondition(String),
    #[error("case sweep range invalid: c_min = {c_min}, c_max = {c_max}")]
    InvalidRange { c_min: i64, c_max: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

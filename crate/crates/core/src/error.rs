use thiserror::Error;

use crate::graph::Vertex;

/// Errors shared by every algorithm in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("source set is empty")]
    EmptySourceSet,
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("slice index {k} exceeds dist(u, v) = {dist}")]
    KOutOfRange { k: u32, dist: u32 },
    #[error("graph has {n} vertices, above the desk-scale bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("sampling parameter out of range: {0}")]
    BadParams(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("vertex set is not a clique: {0} and {1} are not adjacent")]
    NotAClique(Vertex, Vertex),
    #[error("class violation: {0}")]
    ClassViolation(String),
    #[error("randomized precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },
    #[error("centroid step has fewer than two components")]
    DegenerateStep,
    #[error("graph is not Helly")]
    NotHellyDetected,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn violation(msg: impl Into<String>) -> Error {
    Error::ClassViolation(msg.into())
}

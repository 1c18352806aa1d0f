use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex index out of range: {vertex} >= {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {0} is isolated (degree 0)")]
    IsolatedVertex(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("graph is not unicyclic")]
    NotUnicyclic,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph too large: n = {n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

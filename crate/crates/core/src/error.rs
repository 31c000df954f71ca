use thiserror::Error;

/// Errors produced by graph construction, Betti computations and detectors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex} is not allowed in a simple graph")]
    Loop { vertex: usize },
    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("part size list is empty")]
    EmptySizes,
    #[error("parts must be non-empty")]
    EmptyPart,
    #[error("parts overlap")]
    OverlappingParts,
    #[error("vertex sets X and Y overlap")]
    OverlappingSides,
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidField(u64),
    #[error("expected a vertex set of size {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("vertex set needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("part sizes sum to {sum} but the vertex set has {len} vertices")]
    SizeMismatch { sum: usize, len: usize },
    #[error(
        "full Betti table refused for n = {n} (cap {cap}); raise the cap or query single supports"
    )]
    OverCap { n: usize, cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

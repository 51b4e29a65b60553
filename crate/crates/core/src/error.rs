use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}: loops are not allowed")]
    Loop(usize),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph has {n} vertices, limit for this operation is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("multiplicity must be at least 1 (edge {0}-{1})")]
    ZeroMultiplicity(usize, usize),

    #[error("vertex set must not be empty")]
    EmptySet,

    #[error("no edge between {0} and {1}")]
    MissingEdge(usize, usize),

    #[error("split-off at {y} would join {x} to itself")]
    SplitLoop { x: usize, y: usize },

    #[error("vertex {v} has degree {degree}, expected 2")]
    NotDegreeTwo { v: usize, degree: u32 },

    #[error("roots must be distinct vertices of the graph")]
    InvalidRoots,

    #[error("root count mismatch: host has {host}, pattern has {pattern}")]
    RootCountMismatch { host: usize, pattern: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed branch decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("no sporadic catalog loaded")]
    CatalogMissing,
}

pub type Result<T> = std::result::Result<T, Error>;

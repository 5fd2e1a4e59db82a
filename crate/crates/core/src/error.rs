use thiserror::Error;

/// Errors raised by graph construction, the definition-based checkers and the
/// exhaustive oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),

    #[error("vertex index {index} out of range for a graph with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("edge index {index} out of range for a graph with {len} edges")]
    EdgeOutOfRange { index: usize, len: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("orientation does not match the graph: {0}")]
    OrientationMismatch(String),

    #[error("edges {0:?} do not form a directed cycle of the orientation")]
    NotADirectedCycle(Vec<usize>),

    #[error("genus {0} is unsupported, need genus >= 2")]
    UnsupportedGenus(i64),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not the dual graph of a stable curve")]
    NotStableCurve,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} is {actual}, bound is {bound}")]
    ResourceLimit {
        what: &'static str,
        actual: usize,
        bound: usize,
    },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

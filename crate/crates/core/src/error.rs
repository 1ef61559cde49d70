use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text. `line` is 1-based.
    #[error("line {line}: {message} (token `{token}`)")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },

    #[error("vertex `{vertex}` has degree {degree}, expected 4")]
    Degree { vertex: String, degree: usize },

    #[error("vertex `{vertex}` occurs {count} times, expected 2")]
    Occurrence { vertex: String, count: usize },

    #[error("line {line}: dangling half-edge, an edge needs exactly two endpoints")]
    DanglingHalfEdge { line: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("word does not trace a trail in the graph: {0}")]
    NotATrail(String),

    #[error("vertices `{0}` and `{1}` are not interlaced")]
    NotInterlaced(String, String),

    #[error("objects live on different graphs")]
    GraphMismatch,

    #[error("invalid transition at `{vertex}`: {message}")]
    Transition { vertex: String, message: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("graph has {vertices} vertices, above the sweep cap of {cap}")]
    VertexCap { vertices: usize, cap: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("pattern graph has no edges")]
    EdgelessPattern,

    #[error("pattern graph has {0} vertices, the generic oracle supports at most 12")]
    PatternTooLarge(usize),

    #[error("t must be at least {min}, got {t}")]
    InvalidT { t: usize, min: usize },

    #[error("density is undefined for a graph without vertices")]
    EmptyGraph,

    #[error("exhaustive enumeration supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no percolation bracket found in [0, 1] for n = {n}, t = {t}")]
    BracketNotFound { n: usize, t: usize },

    #[error("exponent fit needs at least 3 distinct n values, got {0}")]
    TooFewPoints(usize),

    #[error("malformed edge list at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

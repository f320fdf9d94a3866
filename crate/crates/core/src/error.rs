use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    /// A desk-scale guard was exceeded. The operation refused rather than
    /// running unbounded.
    #[error("{operation}: requested {requested} exceeds the limit {limit}")]
    ResourceLimit {
        operation: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("chart failure: {0}")]
    ChartFailure(String),

    #[error("contradictory coincidence pattern: {0}")]
    ContradictoryPattern(String),

    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("precision failure: {0}")]
    PrecisionFailure(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

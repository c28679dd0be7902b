use thiserror::Error;

/// Errors raised by the capability-set engine and its file formats.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid coordinate {value} at position {index}: coordinates must be finite and non-negative")]
    InvalidCoordinate { index: usize, value: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid probabilities: {0}")]
    InvalidProbabilities(String),

    #[error("{what} requires {required} evaluations, exceeding the cap of {cap}")]
    Capacity { what: &'static str, required: u128, cap: u64 },

    #[error("expected {expected} entries (one per state), found {found}")]
    StateCountMismatch { expected: usize, found: usize },

    #[error("invalid weight {value} at position {index}: weights must be strictly positive")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("invalid scale factor {value} at position {index}: factors must be strictly positive")]
    NonPositiveScale { index: usize, value: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;

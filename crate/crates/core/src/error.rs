use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("arity mismatch: expected {expected} images, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("quotient is not finite-dimensional")]
    NotArtinian,
    #[error("ideal is not zero-dimensional at the origin")]
    NotZeroDimensional,
    #[error("truncation degree {given} too small; need at least {required}")]
    TruncationTooSmall { given: u32, required: u32 },
    #[error("not a multiple structure: {0}")]
    NotMultipleStructure(String),
    #[error("invalid construction plan: {0}")]
    InvalidPlan(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Runtime(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

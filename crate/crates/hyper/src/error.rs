use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("algebra error: {0}")]
    Algebra(#[from] hyperlab_algebra::AlgebraError),
    #[error("index {0} out of range for carrier of size {1}")]
    IndexOutOfRange(usize, usize),
    #[error("T is not a subgroup of the multiplicative group: {0}")]
    NotASubgroup(String),
    #[error("table has no multiplication")]
    MissingMultiplication,
    #[error("degree cap must be >= 1")]
    BadCap,
    #[error("malformed table text: {0}")]
    ParseError(String),
    #[error("construction postcondition failed: {0}")]
    BrokenConstruction(String),
}

pub type Result<T> = std::result::Result<T, HyperError>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectiveError {
    #[error("algebra error: {0}")]
    Algebra(#[from] hyperlab_algebra::AlgebraError),
    #[error("hyperstructure error: {0}")]
    Hyper(#[from] hyperlab_hyper::HyperError),
    #[error("the field F_2 is excluded from hypergroup constructions")]
    ExcludedField,
    #[error("operation needs dimension >= {0}")]
    DimensionError(usize),
    #[error("coordinates must be a nonzero vector of length n+1")]
    BadPoint,
    #[error("points belong to different spaces")]
    IncompatibleSpaces,
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("space has {0} points, exceeding the desk-scale guard of {1}")]
    TooLarge(usize, usize),
    #[error("modulus degree {got} does not match n+1 = {expected}")]
    DegreeMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, ProjectiveError>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalNumError {
    #[error("algebra error: {0}")]
    Algebra(#[from] hyperlab_algebra::AlgebraError),
    #[error("{0} is not prime")]
    InvalidPrime(u64),
    #[error("numbers belong to different local fields")]
    IncompatibleFields,
    #[error("result would depend on digits beyond the known precision")]
    InsufficientPrecision,
    #[error("Hensel condition |f(x0)| < |f'(x0)|^2 fails")]
    NoConvergence,
    #[error("square classes over residue characteristic 2 Laurent fields are unsupported")]
    UnsupportedCharacteristic,
    #[error("polynomial is inseparable")]
    InseparablePolynomial,
    #[error("coefficients must lie in the valuation ring (no negative valuations)")]
    UnnormalizedInput,
    #[error("polynomials must be monic of matching degree >= 1")]
    DegreeMismatch,
    #[error("operation does not apply to this local field kind")]
    KindMismatch,
    #[error("the zero element is not a valid input here")]
    ZeroInput,
}

pub type Result<T> = std::result::Result<T, LocalNumError>;

use thiserror::Error;

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("elements belong to incompatible fields")]
    IncompatibleFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus must be monic of degree >= 1")]
    BadModulus,
    #[error("modulus is reducible over its base field")]
    ReducibleModulus,
    #[error("resultant is undefined for a zero first argument")]
    UndefinedResultant,
    #[error("discriminant is undefined for constant polynomials")]
    UndefinedDiscriminant,
    #[error("irreducibility test supports degree 1..=8, got {0}")]
    DegreeOutOfRange(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

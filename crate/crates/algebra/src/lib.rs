//! Exact arithmetic foundations: finite fields and explicit extensions,
//! dense univariate polynomials over exact coefficient fields, the
//! resultant/discriminant toolkit, Frobenius automorphisms, and rational
//! functions. Everything is immutable after construction and free of
//! floating point.

pub mod coeff;
pub mod error;
pub mod extension;
pub mod finite_field;
pub mod frobenius;
pub mod irreducible;
pub mod polynomial;
pub mod ratfunc;

pub use coeff::{is_integer, rat, ratio, Coeff};
pub use error::{AlgebraError, Result};
pub use extension::{ExtElement, ExtensionSpec};
pub use finite_field::{factor_prime_power, is_prime, FieldCarrier, FieldElement, FiniteFieldSpec};
pub use frobenius::{automorphism_group, FrobeniusAuto};
pub use irreducible::{find_irreducible, is_irreducible};
pub use polynomial::{poly_discriminant, poly_gcd, poly_resultant, Polynomial};
pub use ratfunc::RatFunc;

//! Truncated non-Archimedean arithmetic over Q_p and F_q((t)): exact
//! valuations as rational exponents, p-adic and h-adic norms, Hensel
//! lifting with condition checking, square classes and quadratic
//! extension counts, and the Krasner-lemma separation criterion.

pub mod error;
pub mod hensel;
pub mod krasner;
pub mod norms;
pub mod number;
pub mod squares;
pub mod valexp;

pub use error::{LocalNumError, Result};
pub use hensel::hensel_lift;
pub use krasner::{
    krasner_radius_bound, krasner_radius_bound_laurent, krasner_separates,
    krasner_separates_laurent, KrasnerVerdict,
};
pub use norms::{bigint_valuation, hadic_norm_ratfunc, padic_norm_rational, RatFuncPlace};
pub use number::{LocalFieldSpec, LocalNumber, DEFAULT_PRECISION};
pub use squares::{count_quadratic_extensions, square_class, SquareClass, UnitClass};
pub use valexp::ValExp;

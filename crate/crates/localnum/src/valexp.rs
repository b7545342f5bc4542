use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// An exact valuation exponent: the norm |x| = base^(-value) is never
/// materialized as a real number; all comparisons happen on the exponent,
/// which may be a non-integer rational (half-integers arise from square
/// roots of discriminants). Infinity is the valuation of zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValExp {
    Finite(BigRational),
    Infinity,
}

impl ValExp {
    pub fn from_int(v: i64) -> Self {
        ValExp::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        ValExp::Finite(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ValExp::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ValExp::Finite(v) if v.is_zero())
    }

    pub fn half(&self) -> Self {
        self.div_int(2)
    }

    pub fn div_int(&self, d: i64) -> Self {
        match self {
            ValExp::Infinity => ValExp::Infinity,
            ValExp::Finite(v) => {
                ValExp::Finite(v / BigRational::from_integer(BigInt::from(d)))
            }
        }
    }

    pub fn mul_int(&self, m: i64) -> Self {
        match self {
            ValExp::Infinity => ValExp::Infinity,
            ValExp::Finite(v) => {
                ValExp::Finite(v * BigRational::from_integer(BigInt::from(m)))
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (ValExp::Finite(a), ValExp::Finite(b)) => ValExp::Finite(a + b),
            _ => ValExp::Infinity,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ValExp::Finite(v) => Some(v),
            ValExp::Infinity => None,
        }
    }
}

impl PartialOrd for ValExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Infinity (the valuation of zero, norm 0) compares greater than every
/// finite exponent.
impl Ord for ValExp {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ValExp::Infinity, ValExp::Infinity) => Ordering::Equal,
            (ValExp::Infinity, _) => Ordering::Greater,
            (_, ValExp::Infinity) => Ordering::Less,
            (ValExp::Finite(a), ValExp::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ValExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValExp::Infinity => write!(f, "inf"),
            ValExp::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_with_infinity() {
        assert!(ValExp::Infinity > ValExp::from_int(1_000_000));
        assert!(ValExp::from_ratio(1, 2) > ValExp::from_int(0));
        assert!(ValExp::from_ratio(1, 2) < ValExp::from_int(1));
        assert_eq!(ValExp::from_ratio(2, 4), ValExp::from_ratio(1, 2));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(ValExp::from_int(1).half(), ValExp::from_ratio(1, 2));
        assert_eq!(ValExp::from_ratio(1, 2).mul_int(2), ValExp::from_int(1));
        assert_eq!(ValExp::Infinity.half(), ValExp::Infinity);
        assert_eq!(ValExp::from_int(2).add(&ValExp::from_int(3)), ValExp::from_int(5));
        assert_eq!(ValExp::from_int(2).add(&ValExp::Infinity), ValExp::Infinity);
    }
}

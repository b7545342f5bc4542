use crate::error::{AlgebraError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Coefficient field for generic polynomial arithmetic.
///
/// Implementors are exact field elements that know how to produce the zero
/// and one of their own field (`*_like`), so that polynomials never need a
/// separate field handle. Mixing elements of distinct fields is a hard
/// error, never a coercion.
pub trait Coeff: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_sub(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn try_div(&self, rhs: &Self) -> Result<Self>;
    fn neg_val(&self) -> Self;

    /// Whether both elements live in the same field.
    fn same_field(&self, other: &Self) -> bool;

    /// `n * self` computed by double-and-add; exact in any characteristic.
    fn mul_usize(&self, n: usize) -> Self {
        let mut acc = self.zero_like();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_add(&base).expect("same field");
            }
            k >>= 1;
            if k > 0 {
                base = base.try_add(&base).expect("same field");
            }
        }
        acc
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(self - rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self / rhs)
    }
    fn neg_val(&self) -> Self {
        -self
    }
    fn same_field(&self, _other: &Self) -> bool {
        true
    }
}

/// Exact rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational n/d.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// True when the rational is a (possibly negative) integer.
pub fn is_integer(q: &BigRational) -> bool {
    q.denom().abs() == BigInt::one()
}

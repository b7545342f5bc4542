use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};
use crate::finite_field::FieldElement;
use crate::polynomial::{poly_gcd, Polynomial};
use std::fmt;

/// Rational function over a finite field, kept in lowest terms with a monic
/// denominator, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Polynomial<FieldElement>,
    den: Polynomial<FieldElement>,
}

impl RatFunc {
    pub fn new(num: Polynomial<FieldElement>, den: Polynomial<FieldElement>) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let (Some(a), Some(b)) = (num.leading(), den.leading()) {
            if !a.same_field(b) {
                return Err(AlgebraError::IncompatibleFields);
            }
        }
        let mut out = Self { num, den };
        out.normalize()?;
        Ok(out)
    }

    pub fn from_poly(p: Polynomial<FieldElement>) -> Result<Self> {
        let one = match p.leading() {
            Some(lc) => Polynomial::constant(lc.one_like()),
            None => return Err(AlgebraError::Invalid("zero polynomial needs an explicit field; use RatFunc::new".into())),
        };
        Self::new(p, one)
    }

    fn normalize(&mut self) -> Result<()> {
        if self.num.is_zero() {
            self.den = Polynomial::constant(self.den.leading().unwrap().one_like());
            return Ok(());
        }
        let g = poly_gcd(&self.num, &self.den)?;
        if g.degree() != Some(0) {
            self.num = self.num.divmod(&g)?.0;
            self.den = self.den.divmod(&g)?.0;
        }
        let lc = self.den.leading().unwrap().clone();
        if lc != lc.one_like() {
            let inv = lc.one_like().try_div(&lc)?;
            self.num = self.num.scale(&inv)?;
            self.den = self.den.scale(&inv)?;
        }
        Ok(())
    }

    pub fn num(&self) -> &Polynomial<FieldElement> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<FieldElement> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let num = self.num.mul(&rhs.den)?.add(&rhs.num.mul(&self.den)?)?;
        Self::new(num, self.den.mul(&rhs.den)?)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.negate())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.num.mul(&rhs.num)?, self.den.mul(&rhs.den)?)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.num.mul(&rhs.den)?, self.den.mul(&rhs.num)?)
    }

    pub fn negate(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Coeff for RatFunc {
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        let one = self.den.leading().unwrap().one_like();
        Self { num: Polynomial::zero(), den: Polynomial::constant(one) }
    }
    fn one_like(&self) -> Self {
        let one = self.den.leading().unwrap().one_like();
        Self { num: Polynomial::constant(one.clone()), den: Polynomial::constant(one) }
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.add(rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.sub(rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.div(rhs)
    }
    fn neg_val(&self) -> Self {
        self.negate()
    }
    fn same_field(&self, other: &Self) -> bool {
        self.den.leading().unwrap().same_field(other.den.leading().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FiniteFieldSpec;

    fn f3poly(cs: &[u64]) -> Polynomial<FieldElement> {
        let f3 = FiniteFieldSpec::prime(3).unwrap();
        Polynomial::new(cs.iter().map(|&c| f3.from_int(c)).collect())
    }

    #[test]
    fn normalization_gives_structural_equality() {
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let a = RatFunc::new(f3poly(&[2, 0, 1]), f3poly(&[2, 1])).unwrap();
        let b = RatFunc::from_poly(f3poly(&[1, 1])).unwrap();
        assert_eq!(a, b);
        // 2t/2 normalizes the monic denominator away
        let c = RatFunc::new(f3poly(&[0, 2]), f3poly(&[2])).unwrap();
        let d = RatFunc::from_poly(f3poly(&[0, 1])).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn field_arithmetic() {
        let t = RatFunc::from_poly(f3poly(&[0, 1])).unwrap();
        let one = Coeff::one_like(&t);
        let inv_t = t.inverse().unwrap();
        assert_eq!(t.mul(&inv_t).unwrap(), one);
        let s = t.add(&one).unwrap(); // t + 1
        assert_eq!(s.sub(&t).unwrap(), one);
        assert!(t.sub(&t).unwrap().is_zero());
    }
}

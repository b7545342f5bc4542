use crate::error::{LocalNumError, Result};
use crate::valexp::ValExp;
use hyperlab_algebra::{is_irreducible, is_prime, FieldElement, Polynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// p-adic valuation of a nonzero integer.
pub fn bigint_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let bp = BigInt::from(p);
    let mut v = 0i64;
    let mut rest = n.abs();
    loop {
        let (q, r) = rest.div_mod_floor(&bp);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    v
}

/// The p-adic norm of a rational, as its valuation exponent:
/// v = v_p(numerator) - v_p(denominator), with |a|_p = p^(-v) and
/// |0|_p = 0 (exponent infinity).
pub fn padic_norm_rational(a: &BigRational, p: u64) -> Result<ValExp> {
    if !is_prime(p) {
        return Err(LocalNumError::InvalidPrime(p));
    }
    if a.is_zero() {
        return Ok(ValExp::Infinity);
    }
    Ok(ValExp::from_int(bigint_valuation(a.numer(), p) - bigint_valuation(a.denom(), p)))
}

/// Which norm to take on the rational function field k(t): the h-adic one
/// for an irreducible h, or the degree norm.
#[derive(Debug, Clone)]
pub enum RatFuncPlace {
    Irreducible(Polynomial<FieldElement>),
    Degree,
}

/// Multiplicity of `h` in a nonzero polynomial, by repeated exact
/// division.
fn multiplicity(f: &Polynomial<FieldElement>, h: &Polynomial<FieldElement>) -> Result<i64> {
    let mut v = 0i64;
    let mut rest = f.clone();
    loop {
        let (q, r) = rest.divmod(h)?;
        if !r.is_zero() {
            return Ok(v);
        }
        rest = q;
        v += 1;
        if rest.degree().is_none() {
            return Ok(v);
        }
    }
}

/// The h-adic norm of the rational function num/den as a valuation
/// exponent: the multiplicity of h in the numerator minus its
/// multiplicity in the denominator. With the `Degree` flag the degree
/// norm v = deg(den) - deg(num) is computed instead. Constants have
/// h-adic exponent 0 for every irreducible h.
pub fn hadic_norm_ratfunc(
    num: &Polynomial<FieldElement>,
    den: &Polynomial<FieldElement>,
    place: &RatFuncPlace,
) -> Result<ValExp> {
    if den.is_zero() {
        return Err(LocalNumError::ZeroInput);
    }
    if num.is_zero() {
        return Ok(ValExp::Infinity);
    }
    match place {
        RatFuncPlace::Irreducible(h) => {
            match h.degree() {
                None | Some(0) => {
                    return Err(LocalNumError::Algebra(hyperlab_algebra::AlgebraError::BadModulus))
                }
                _ => {}
            }
            if !is_irreducible(h)? {
                return Err(LocalNumError::Algebra(
                    hyperlab_algebra::AlgebraError::ReducibleModulus,
                ));
            }
            Ok(ValExp::from_int(multiplicity(num, h)? - multiplicity(den, h)?))
        }
        RatFuncPlace::Degree => Ok(ValExp::from_int(
            den.degree().unwrap() as i64 - num.degree().unwrap() as i64,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperlab_algebra::{rat, ratio, FiniteFieldSpec};

    fn f3poly(cs: &[u64]) -> Polynomial<FieldElement> {
        let f3 = FiniteFieldSpec::prime(3).unwrap();
        Polynomial::new(cs.iter().map(|&c| f3.from_int(c)).collect())
    }

    #[test]
    fn padic_norm_examples() {
        // |12|_2 = 2^-2
        assert_eq!(padic_norm_rational(&rat(12), 2).unwrap(), ValExp::from_int(2));
        assert_eq!(padic_norm_rational(&rat(0), 5).unwrap(), ValExp::Infinity);
        // 5/10 = 1/2 is a 5-adic unit
        assert_eq!(padic_norm_rational(&ratio(5, 10), 5).unwrap(), ValExp::from_int(0));
        assert_eq!(padic_norm_rational(&rat(3), 4).unwrap_err(), LocalNumError::InvalidPrime(4));
    }

    #[test]
    fn hadic_norm_examples() {
        let t = RatFuncPlace::Irreducible(f3poly(&[0, 1]));
        // t^2 (t + 1) has t-adic exponent 2
        let num = f3poly(&[0, 0, 1, 1]);
        let one = f3poly(&[1]);
        assert_eq!(hadic_norm_ratfunc(&num, &one, &t).unwrap(), ValExp::from_int(2));
        // constants are units for every h-adic place
        assert_eq!(hadic_norm_ratfunc(&f3poly(&[2]), &one, &t).unwrap(), ValExp::from_int(0));
        let h2 = RatFuncPlace::Irreducible(f3poly(&[1, 0, 1]));
        assert_eq!(hadic_norm_ratfunc(&f3poly(&[2]), &one, &h2).unwrap(), ValExp::from_int(0));
        // reducible h rejected
        let bad = RatFuncPlace::Irreducible(f3poly(&[2, 0, 1]));
        assert!(hadic_norm_ratfunc(&num, &one, &bad).is_err());
        // 0/0 rejected
        assert_eq!(
            hadic_norm_ratfunc(&Polynomial::zero(), &Polynomial::zero(), &t).unwrap_err(),
            LocalNumError::ZeroInput
        );
    }

    #[test]
    fn degree_norm_example() {
        // (t^2 + 1)/t^5: exponent deg(den) - deg(num) = 3
        let num = f3poly(&[1, 0, 1]);
        let den = f3poly(&[0, 0, 0, 0, 0, 1]);
        assert_eq!(
            hadic_norm_ratfunc(&num, &den, &RatFuncPlace::Degree).unwrap(),
            ValExp::from_int(3)
        );
    }

    #[test]
    fn hadic_multiplicativity() {
        let t = RatFuncPlace::Irreducible(f3poly(&[0, 1]));
        let one = f3poly(&[1]);
        let f = f3poly(&[0, 2, 1]); // t(t + 2)
        let g = f3poly(&[0, 0, 1, 1]); // t^2 (t + 1)
        let fg = f.mul(&g).unwrap();
        let vf = hadic_norm_ratfunc(&f, &one, &t).unwrap();
        let vg = hadic_norm_ratfunc(&g, &one, &t).unwrap();
        assert_eq!(hadic_norm_ratfunc(&fg, &one, &t).unwrap(), vf.add(&vg));
    }
}

use crate::error::{AlgebraError, Result};
use crate::finite_field::{FieldCarrier, FieldElement, FiniteFieldSpec};
use crate::polynomial::{poly_gcd, Polynomial};
use std::sync::Arc;

/// Irreducibility over the (finite) coefficient field of `f`.
///
/// Degree 1 polynomials are irreducible; degree 2 uses exhaustive root
/// search; degrees 3..=8 use the standard test: `X^(q^d) == X (mod f)`
/// together with `gcd(X^(q^(d/r)) - X, f) = 1` for every prime divisor `r`
/// of `d`. Larger degrees are out of desk scale and rejected.
pub fn is_irreducible(f: &Polynomial<FieldElement>) -> Result<bool> {
    let d = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let spec = f.leading().unwrap().spec().clone();
    let q = spec.order() as u128;
    if d == 2 {
        for e in spec.elements() {
            if f.eval(&e)?.is_zero() {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    if d > 8 {
        return Err(AlgebraError::DegreeOutOfRange(d));
    }
    let x = Polynomial::monomial(spec.one(), 1);
    // X^(q^d) == X (mod f)
    let frob_d = x.pow_mod(q.pow(d as u32), f)?;
    if frob_d != x.rem(f)? {
        return Ok(false);
    }
    for r in prime_divisors(d) {
        let e = d / r;
        let frob_e = x.pow_mod(q.pow(e as u32), f)?;
        let diff = frob_e.sub(&x)?;
        let g = poly_gcd(f, &diff)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime_divisors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            out.push(p);
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// The lexicographically least monic irreducible polynomial of degree `d`
/// over `base`. Candidates are ordered by their coefficient tuples read
/// from the highest power down (equivalently, by the base-q integer whose
/// digits are the coefficients with the constant term least significant),
/// so the result is deterministic and extension towers are reproducible.
pub fn find_irreducible(base: &Arc<FiniteFieldSpec>, d: usize) -> Result<Polynomial<FieldElement>> {
    if d == 0 {
        return Err(AlgebraError::Invalid("degree must be >= 1".into()));
    }
    let q = base.order();
    let els = base.elements();
    let total: u128 = (q as u128).pow(d as u32);
    let mut k: u128 = 0;
    while k < total {
        let mut coeffs: Vec<FieldElement> = Vec::with_capacity(d + 1);
        let mut rest = k;
        for _ in 0..d {
            coeffs.push(els[(rest % q as u128) as usize].clone());
            rest /= q as u128;
        }
        coeffs.push(base.one());
        let cand = Polynomial::new(coeffs);
        if is_irreducible(&cand)? {
            return Ok(cand);
        }
        k += 1;
    }
    unreachable!("an irreducible polynomial of every degree exists over a finite field")
}

use crate::error::{LocalNumError, Result};
use crate::norms::{bigint_valuation, padic_norm_rational};
use crate::number::{LocalFieldSpec, LocalNumber};
use crate::valexp::ValExp;
use hyperlab_algebra::Polynomial;
use num_rational::BigRational;
use num_traits::Zero;

const MAX_NEWTON_STEPS: usize = 64;

fn rational_valuation(q: &BigRational, p: u64) -> ValExp {
    if q.is_zero() {
        ValExp::Infinity
    } else {
        ValExp::from_int(bigint_valuation(q.numer(), p) - bigint_valuation(q.denom(), p))
    }
}

/// Newton lifting of an approximate root of `f` over Z_p.
///
/// The Hensel condition |f(x0)| < |f'(x0)|^2 is checked on the truncated
/// representative of `x0` before any iteration; failure is a
/// no-convergence error. Iterates are exact rationals, so valuation
/// bookkeeping never degrades; the result is returned truncated to
/// absolute precision `target_prec`, meaning f(x) vanishes to at least
/// that many digits.
pub fn hensel_lift(
    f: &Polynomial<BigRational>,
    x0: &LocalNumber,
    target_prec: usize,
) -> Result<LocalNumber> {
    let spec = x0.spec().clone();
    let LocalFieldSpec::Padic { p } = spec else {
        return Err(LocalNumError::KindMismatch);
    };
    // coefficients must lie in Z_p
    for c in f.coeffs() {
        if padic_norm_rational(c, p)? < ValExp::from_int(0) {
            return Err(LocalNumError::UnnormalizedInput);
        }
    }
    if f.degree().is_none() {
        return Err(LocalNumError::ZeroInput);
    }
    let target = target_prec.max(1);

    let r0 = x0.truncated_rational()?;
    let deriv = f.derivative();
    let f_at = f.eval(&r0).expect("rational arithmetic");
    let fp_at = deriv.eval(&r0).expect("rational arithmetic");
    let t = rational_valuation(&f_at, p);
    let s = rational_valuation(&fp_at, p);

    // the condition must be visible within x0's known window
    if !x0.is_zero() {
        let window = match x0.valuation() {
            ValExp::Finite(v) => v + BigRational::from_integer(x0.known_digits().into()),
            ValExp::Infinity => unreachable!(),
        };
        if let ValExp::Finite(tv) = &t {
            if tv >= &window {
                return Err(LocalNumError::InsufficientPrecision);
            }
        }
    }
    if t <= s.mul_int(2) {
        return Err(LocalNumError::NoConvergence);
    }

    // exact Newton iteration; quadratic convergence in the p-adic metric
    let mut x = r0;
    for _ in 0..MAX_NEWTON_STEPS {
        let fx = f.eval(&x).expect("rational arithmetic");
        if rational_valuation(&fx, p) >= ValExp::from_int(target as i64) {
            let val = match rational_valuation(&x, p) {
                ValExp::Infinity => return Ok(LocalNumber::zero(spec)),
                ValExp::Finite(v) => v,
            };
            // truncate to absolute precision `target`
            let val_int = val.to_integer().try_into().unwrap_or(0i64);
            let rel = (target as i64 - val_int).max(1) as usize;
            return LocalNumber::from_rational(&spec, &x, rel);
        }
        let fpx = deriv.eval(&x).expect("rational arithmetic");
        if fpx.is_zero() {
            return Err(LocalNumError::NoConvergence);
        }
        x -= fx / fpx;
    }
    Err(LocalNumError::NoConvergence)
}

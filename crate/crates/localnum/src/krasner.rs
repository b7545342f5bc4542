use crate::error::{LocalNumError, Result};
use crate::norms::{hadic_norm_ratfunc, padic_norm_rational, RatFuncPlace};
use crate::number::LocalFieldSpec;
use crate::valexp::ValExp;
use hyperlab_algebra::{
    poly_discriminant, poly_gcd, poly_resultant, Coeff, Polynomial, RatFunc,
};
use num_rational::BigRational;

/// Outcome of the separation criterion: a certificate that the two
/// quotient rings are isomorphic, or no information. The criterion is
/// sufficient only; `Inconclusive` never asserts non-isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrasnerVerdict {
    CertifiedIsomorphic,
    Inconclusive,
}

fn check_padic(spec: &LocalFieldSpec) -> Result<u64> {
    match spec {
        LocalFieldSpec::Padic { p } => Ok(*p),
        LocalFieldSpec::Laurent { .. } => Err(LocalNumError::KindMismatch),
    }
}

fn check_laurent(spec: &LocalFieldSpec) -> Result<()> {
    match spec {
        LocalFieldSpec::Laurent { .. } => Ok(()),
        LocalFieldSpec::Padic { .. } => Err(LocalNumError::KindMismatch),
    }
}

/// Shared core over any exact coefficient field with a valuation.
fn radius_bound_core<C: Coeff>(
    p: &Polynomial<C>,
    val: &dyn Fn(&C) -> Result<ValExp>,
) -> Result<ValExp> {
    match p.degree() {
        Some(d) if d >= 1 => {}
        _ => return Err(LocalNumError::DegreeMismatch),
    }
    if !p.is_monic() {
        return Err(LocalNumError::DegreeMismatch);
    }
    for c in p.coeffs() {
        if val(c)? < ValExp::from_int(0) {
            return Err(LocalNumError::UnnormalizedInput);
        }
    }
    if poly_gcd(p, &p.derivative())?.degree() != Some(0) {
        return Err(LocalNumError::InseparablePolynomial);
    }
    let disc = poly_discriminant(p)?;
    // |disc| = prod |x_i - x_j|^2 over root pairs; with all roots in the
    // valuation ring each factor is <= 1, so the minimal pairwise distance
    // is at least |disc|^(1/2): as exponents, v(r) = v(disc)/2.
    Ok(val(&disc)?.half())
}

/// Lower bound on the minimal pairwise root distance of a monic
/// irreducible separable polynomial with valuation-ring coefficients,
/// returned as the valuation exponent v(r) = v(disc)/2 (the distance
/// bound is base^(-v(r))). Exact for degree 2, where there is only one
/// root pair.
pub fn krasner_radius_bound(
    p: &Polynomial<BigRational>,
    spec: &LocalFieldSpec,
) -> Result<ValExp> {
    let prime = check_padic(spec)?;
    radius_bound_core(p, &|c| padic_norm_rational(c, prime))
}

fn ratfunc_t_valuation(c: &RatFunc) -> Result<ValExp> {
    let field = c.den().leading().expect("denominator nonzero").spec().clone();
    let t = Polynomial::new(vec![field.zero(), field.one()]);
    hadic_norm_ratfunc(c.num(), c.den(), &RatFuncPlace::Irreducible(t))
}

/// The Laurent-field analogue of `krasner_radius_bound`, with t-adic
/// valuations on rational-function coefficients.
pub fn krasner_radius_bound_laurent(
    p: &Polynomial<RatFunc>,
    spec: &LocalFieldSpec,
) -> Result<ValExp> {
    check_laurent(spec)?;
    radius_bound_core(p, &ratfunc_t_valuation)
}

fn separates_core<C: Coeff>(
    p: &Polynomial<C>,
    q: &Polynomial<C>,
    val: &dyn Fn(&C) -> Result<ValExp>,
) -> Result<KrasnerVerdict> {
    let d = match (p.degree(), q.degree()) {
        (Some(dp), Some(dq)) if dp == dq && dp >= 1 => dp,
        _ => return Err(LocalNumError::DegreeMismatch),
    };
    if !q.is_monic() {
        return Err(LocalNumError::DegreeMismatch);
    }
    for c in q.coeffs() {
        if val(c)? < ValExp::from_int(0) {
            return Err(LocalNumError::UnnormalizedInput);
        }
    }
    // radius_bound_core re-validates p (monic, separable, integral)
    let nu_r = radius_bound_core(p, val)?;
    let res = poly_resultant(p, q)?;
    // all conjugates of q(x_i) share one norm over a local field, so
    // |q(x_i)| = |Res(p, q)|^(1/d) for every root x_i of p
    let nu_res = val(&res)?;
    // certified when |q(x_i)| < r^d, i.e. v(Res)/d > d * v(r), strictly
    let lhs = nu_res.div_int(d as i64);
    let rhs = nu_r.mul_int(d as i64);
    if lhs > rhs {
        Ok(KrasnerVerdict::CertifiedIsomorphic)
    } else {
        Ok(KrasnerVerdict::Inconclusive)
    }
}

/// The separation criterion over Q_p: for p monic irreducible separable
/// and q monic of the same degree, both with valuation-ring coefficients,
/// a sufficiently small |Res(p, q)| certifies F[X]/(q) isomorphic to
/// F[X]/(p) (each root of p has a unique close root of q, and the minimal
/// root distance bound makes Krasner's lemma applicable). Otherwise the
/// result is inconclusive; the criterion never claims non-isomorphism.
/// Irreducibility of p over Q_p is the caller's obligation and is not
/// checked here.
pub fn krasner_separates(
    p: &Polynomial<BigRational>,
    q: &Polynomial<BigRational>,
    spec: &LocalFieldSpec,
) -> Result<KrasnerVerdict> {
    let prime = check_padic(spec)?;
    separates_core(p, q, &|c| padic_norm_rational(c, prime))
}

/// The separation criterion over F_q((t)).
pub fn krasner_separates_laurent(
    p: &Polynomial<RatFunc>,
    q: &Polynomial<RatFunc>,
    spec: &LocalFieldSpec,
) -> Result<KrasnerVerdict> {
    check_laurent(spec)?;
    separates_core(p, q, &ratfunc_t_valuation)
}

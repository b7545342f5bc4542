use crate::error::{LocalNumError, Result};
use crate::valexp::ValExp;
use hyperlab_algebra::{is_prime, FieldElement, FiniteFieldSpec, Polynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

/// Default relative precision (number of stored residue digits).
pub const DEFAULT_PRECISION: usize = 16;

/// A non-Archimedean local field with its implied uniformizer: Q_p with
/// uniformizer p, or F_q((t)) with uniformizer t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalFieldSpec {
    Padic { p: u64 },
    Laurent { residue: Arc<FiniteFieldSpec> },
}

impl LocalFieldSpec {
    pub fn padic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(LocalNumError::InvalidPrime(p));
        }
        Ok(LocalFieldSpec::Padic { p })
    }

    pub fn laurent(residue: Arc<FiniteFieldSpec>) -> Self {
        LocalFieldSpec::Laurent { residue }
    }

    pub fn residue_characteristic(&self) -> u64 {
        match self {
            LocalFieldSpec::Padic { p } => *p,
            LocalFieldSpec::Laurent { residue } => residue.characteristic(),
        }
    }

    pub fn is_padic(&self) -> bool {
        matches!(self, LocalFieldSpec::Padic { .. })
    }
}

impl fmt::Display for LocalFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalFieldSpec::Padic { p } => write!(f, "Q_{p}"),
            LocalFieldSpec::Laurent { residue } => write!(f, "F_{}((t))", residue.order()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Digits {
    Padic(Vec<u64>),
    Laurent(Vec<FieldElement>),
}

impl Digits {
    fn len(&self) -> usize {
        match self {
            Digits::Padic(v) => v.len(),
            Digits::Laurent(v) => v.len(),
        }
    }
}

/// A truncated non-Archimedean number: an exact valuation plus finitely
/// many residue digits, the first of which is nonzero. The digit count is
/// the known relative precision; arithmetic tracks worst-case precision
/// loss and refuses to produce answers with no reliable digit at all.
/// Exact zero is its own case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalNumber {
    spec: LocalFieldSpec,
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Zero,
    Finite { val: i64, digits: Digits },
}

impl LocalNumber {
    pub fn zero(spec: LocalFieldSpec) -> Self {
        Self { spec, repr: Repr::Zero }
    }

    pub fn spec(&self) -> &LocalFieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    pub fn valuation(&self) -> ValExp {
        match &self.repr {
            Repr::Zero => ValExp::Infinity,
            Repr::Finite { val, .. } => ValExp::from_int(*val),
        }
    }

    /// Number of known residue digits (relative precision); zero for the
    /// exact zero, which is infinitely precise.
    pub fn known_digits(&self) -> usize {
        match &self.repr {
            Repr::Zero => 0,
            Repr::Finite { digits, .. } => digits.len(),
        }
    }

    pub fn padic_digits(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Finite { digits: Digits::Padic(v), .. } => Some(v),
            _ => None,
        }
    }

    pub fn laurent_digits(&self) -> Option<&[FieldElement]> {
        match &self.repr {
            Repr::Finite { digits: Digits::Laurent(v), .. } => Some(v),
            _ => None,
        }
    }

    fn int_val(&self) -> i64 {
        match &self.repr {
            Repr::Zero => i64::MAX,
            Repr::Finite { val, .. } => *val,
        }
    }

    // -- constructors -------------------------------------------------

    /// Exact p-adic expansion of a rational to the given relative
    /// precision.
    pub fn from_rational(spec: &LocalFieldSpec, q: &BigRational, prec: usize) -> Result<Self> {
        let LocalFieldSpec::Padic { p } = spec else {
            return Err(LocalNumError::KindMismatch);
        };
        if q.is_zero() {
            return Ok(Self::zero(spec.clone()));
        }
        let prec = prec.max(1);
        let bp = BigInt::from(*p);
        let (vn, un) = split_valuation(q.numer(), &bp);
        let (vd, ud) = split_valuation(q.denom(), &bp);
        let val = vn - vd;
        let modulus = bp.pow(prec as u32);
        // unit part un/ud mod p^prec; ud is coprime to p, so its inverse
        // exists and equals ud^(phi - 1) with phi = p^(prec-1) (p - 1)
        let phi = bp.pow(prec as u32 - 1) * (bp.clone() - BigInt::one());
        let inv = ud.mod_floor(&modulus).modpow(&(phi - BigInt::one()), &modulus);
        let unit = (un.mod_floor(&modulus) * inv).mod_floor(&modulus);
        let mut digits = Vec::with_capacity(prec);
        let mut rest = unit;
        for _ in 0..prec {
            let (next, digit) = rest.div_mod_floor(&bp);
            digits.push(digit.to_u64().expect("digit below p"));
            rest = next;
        }
        debug_assert_ne!(digits[0], 0, "unit part has nonzero leading digit");
        Ok(Self { spec: spec.clone(), repr: Repr::Finite { val, digits: Digits::Padic(digits) } })
    }

    pub fn from_integer(spec: &LocalFieldSpec, n: i64, prec: usize) -> Result<Self> {
        Self::from_rational(spec, &BigRational::from_integer(BigInt::from(n)), prec)
    }

    /// A p-adic number from explicit parts; the leading digit must be
    /// nonzero and all digits reduced mod p.
    pub fn padic_from_parts(spec: &LocalFieldSpec, val: i64, digits: Vec<u64>) -> Result<Self> {
        let LocalFieldSpec::Padic { p } = spec else {
            return Err(LocalNumError::KindMismatch);
        };
        if digits.is_empty() || digits[0] == 0 || digits.iter().any(|&d| d >= *p) {
            return Err(LocalNumError::ZeroInput);
        }
        Ok(Self { spec: spec.clone(), repr: Repr::Finite { val, digits: Digits::Padic(digits) } })
    }

    /// A Laurent-series number from explicit parts.
    pub fn laurent_from_parts(
        spec: &LocalFieldSpec,
        val: i64,
        digits: Vec<FieldElement>,
    ) -> Result<Self> {
        let LocalFieldSpec::Laurent { residue } = spec else {
            return Err(LocalNumError::KindMismatch);
        };
        if digits.is_empty() || digits[0].is_zero() {
            return Err(LocalNumError::ZeroInput);
        }
        for d in &digits {
            if d.spec() != residue && !Arc::ptr_eq(d.spec(), residue) {
                return Err(LocalNumError::IncompatibleFields);
            }
        }
        Ok(Self { spec: spec.clone(), repr: Repr::Finite { val, digits: Digits::Laurent(digits) } })
    }

    /// The t-adic expansion of a rational function num/den to the given
    /// relative precision, by power-series long division.
    pub fn from_ratfunc(
        spec: &LocalFieldSpec,
        num: &Polynomial<FieldElement>,
        den: &Polynomial<FieldElement>,
        prec: usize,
    ) -> Result<Self> {
        let LocalFieldSpec::Laurent { residue } = spec else {
            return Err(LocalNumError::KindMismatch);
        };
        if den.is_zero() {
            return Err(LocalNumError::ZeroInput);
        }
        if num.is_zero() {
            return Ok(Self::zero(spec.clone()));
        }
        let prec = prec.max(1);
        let vn = num.coeffs().iter().position(|c| !c.is_zero()).unwrap() as i64;
        let vd = den.coeffs().iter().position(|c| !c.is_zero()).unwrap() as i64;
        let n: Vec<FieldElement> = num.coeffs()[vn as usize..].to_vec();
        let d: Vec<FieldElement> = den.coeffs()[vd as usize..].to_vec();
        let lead_inv = d[0].inverse()?;
        let zero = residue.zero();
        let mut digits: Vec<FieldElement> = Vec::with_capacity(prec);
        for k in 0..prec {
            let mut acc = n.get(k).cloned().unwrap_or_else(|| zero.clone());
            for i in 1..=k {
                let di = d.get(i).cloned().unwrap_or_else(|| zero.clone());
                acc = acc.checked_sub(&di.checked_mul(&digits[k - i])?)?;
            }
            digits.push(acc.checked_mul(&lead_inv)?);
        }
        debug_assert!(!digits[0].is_zero());
        Ok(Self {
            spec: spec.clone(),
            repr: Repr::Finite { val: vn - vd, digits: Digits::Laurent(digits) },
        })
    }

    /// The truncated value as an exact rational (p-adic only): the digit
    /// window read off literally.
    pub fn truncated_rational(&self) -> Result<BigRational> {
        let LocalFieldSpec::Padic { p } = &self.spec else {
            return Err(LocalNumError::KindMismatch);
        };
        match &self.repr {
            Repr::Zero => Ok(BigRational::zero()),
            Repr::Finite { val, digits: Digits::Padic(ds) } => {
                let bp = BigInt::from(*p);
                let mut unit = BigInt::zero();
                for &d in ds.iter().rev() {
                    unit = unit * &bp + BigInt::from(d);
                }
                let scale = bp.pow(val.unsigned_abs() as u32);
                Ok(if *val >= 0 {
                    BigRational::from_integer(unit * scale)
                } else {
                    BigRational::new(unit, scale)
                })
            }
            _ => unreachable!("padic spec carries padic digits"),
        }
    }

    // -- arithmetic ----------------------------------------------------

    fn same_spec(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(LocalNumError::IncompatibleFields)
        }
    }

    pub fn negate(&self) -> Self {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Finite { val, digits: Digits::Padic(ds) } => {
                let LocalFieldSpec::Padic { p } = &self.spec else { unreachable!() };
                // -(unit) mod p^k: complement digits with a borrow
                let bp = BigInt::from(*p);
                let modulus = bp.pow(ds.len() as u32);
                let mut unit = BigInt::zero();
                for &d in ds.iter().rev() {
                    unit = unit * &bp + BigInt::from(d);
                }
                let neg = (modulus - unit).mod_floor(&bp.pow(ds.len() as u32));
                let digits = int_to_digits(&neg, *p, ds.len());
                Self {
                    spec: self.spec.clone(),
                    repr: Repr::Finite { val: *val, digits: Digits::Padic(digits) },
                }
            }
            Repr::Finite { val, digits: Digits::Laurent(ds) } => {
                let digits = ds.iter().map(FieldElement::negate).collect();
                Self {
                    spec: self.spec.clone(),
                    repr: Repr::Finite { val: *val, digits: Digits::Laurent(digits) },
                }
            }
        }
    }

    /// Sum with worst-case precision accounting: the reliable window is
    /// the intersection of the operands' windows, and full cancellation
    /// inside it is an insufficient-precision error rather than a guess.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) => return Ok(other.clone()),
            (_, Repr::Zero) => return Ok(self.clone()),
            _ => {}
        }
        let (v1, k1) = (self.int_val(), self.known_digits() as i64);
        let (v2, k2) = (other.int_val(), other.known_digits() as i64);
        let start = v1.min(v2);
        let end = (v1 + k1).min(v2 + k2);
        let window = (end - start) as usize;
        if window == 0 {
            return Err(LocalNumError::InsufficientPrecision);
        }
        match (&self.repr, &other.repr) {
            (
                Repr::Finite { digits: Digits::Padic(d1), .. },
                Repr::Finite { digits: Digits::Padic(d2), .. },
            ) => {
                let LocalFieldSpec::Padic { p } = &self.spec else { unreachable!() };
                let bp = BigInt::from(*p);
                let modulus = bp.pow(window as u32);
                let u1 = digits_to_int(d1, *p) * bp.pow((v1 - start) as u32);
                let u2 = digits_to_int(d2, *p) * bp.pow((v2 - start) as u32);
                let sum = (u1 + u2).mod_floor(&modulus);
                if sum.is_zero() {
                    return Err(LocalNumError::InsufficientPrecision);
                }
                let (shift, unit) = split_valuation(&sum, &bp);
                let known = window - shift as usize;
                let digits = int_to_digits(&unit, *p, known);
                Ok(Self {
                    spec: self.spec.clone(),
                    repr: Repr::Finite { val: start + shift, digits: Digits::Padic(digits) },
                })
            }
            (
                Repr::Finite { digits: Digits::Laurent(d1), .. },
                Repr::Finite { digits: Digits::Laurent(d2), .. },
            ) => {
                let LocalFieldSpec::Laurent { residue } = &self.spec else { unreachable!() };
                let zero = residue.zero();
                let mut sum: Vec<FieldElement> = Vec::with_capacity(window);
                for i in 0..window as i64 {
                    let a = digit_at(d1, v1, start + i).unwrap_or(&zero);
                    let b = digit_at(d2, v2, start + i).unwrap_or(&zero);
                    sum.push(a.checked_add(b)?);
                }
                let shift = match sum.iter().position(|c| !c.is_zero()) {
                    Some(s) => s,
                    None => return Err(LocalNumError::InsufficientPrecision),
                };
                Ok(Self {
                    spec: self.spec.clone(),
                    repr: Repr::Finite {
                        val: start + shift as i64,
                        digits: Digits::Laurent(sum.split_off(shift)),
                    },
                })
            }
            _ => unreachable!("spec equality forces matching digit kinds"),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    /// Product: valuations add exactly; relative precision is the minimum
    /// of the operands'.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => return Ok(Self::zero(self.spec.clone())),
            _ => {}
        }
        let val = self.int_val() + other.int_val();
        let window = self.known_digits().min(other.known_digits());
        match (&self.repr, &other.repr) {
            (
                Repr::Finite { digits: Digits::Padic(d1), .. },
                Repr::Finite { digits: Digits::Padic(d2), .. },
            ) => {
                let LocalFieldSpec::Padic { p } = &self.spec else { unreachable!() };
                let bp = BigInt::from(*p);
                let modulus = bp.pow(window as u32);
                let prod = (digits_to_int(d1, *p) * digits_to_int(d2, *p)).mod_floor(&modulus);
                let digits = int_to_digits(&prod, *p, window);
                debug_assert_ne!(digits[0], 0);
                Ok(Self {
                    spec: self.spec.clone(),
                    repr: Repr::Finite { val, digits: Digits::Padic(digits) },
                })
            }
            (
                Repr::Finite { digits: Digits::Laurent(d1), .. },
                Repr::Finite { digits: Digits::Laurent(d2), .. },
            ) => {
                let LocalFieldSpec::Laurent { residue } = &self.spec else { unreachable!() };
                let zero = residue.zero();
                let mut prod = vec![zero; window];
                for (i, a) in d1.iter().enumerate().take(window) {
                    for (j, b) in d2.iter().enumerate() {
                        if i + j >= window {
                            break;
                        }
                        prod[i + j] = prod[i + j].checked_add(&a.checked_mul(b)?)?;
                    }
                }
                debug_assert!(!prod[0].is_zero());
                Ok(Self {
                    spec: self.spec.clone(),
                    repr: Repr::Finite { val, digits: Digits::Laurent(prod) },
                })
            }
            _ => unreachable!(),
        }
    }
}

fn digit_at(digits: &[FieldElement], val: i64, at: i64) -> Option<&FieldElement> {
    let idx = at - val;
    if idx < 0 {
        None
    } else {
        digits.get(idx as usize)
    }
}

/// v_p and unit part of a nonzero integer.
fn split_valuation(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut rest = n.abs();
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    loop {
        let (q, r) = rest.div_mod_floor(p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    (v, sign * rest)
}

fn digits_to_int(digits: &[u64], p: u64) -> BigInt {
    let bp = BigInt::from(p);
    let mut out = BigInt::zero();
    for &d in digits.iter().rev() {
        out = out * &bp + BigInt::from(d);
    }
    out
}

fn int_to_digits(n: &BigInt, p: u64, len: usize) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut rest = n.mod_floor(&bp.pow(len as u32));
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let (q, r) = rest.div_mod_floor(&bp);
        out.push(r.to_u64().expect("digit below p"));
        rest = q;
    }
    out
}

impl fmt::Display for LocalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero => write!(f, "0"),
            Repr::Finite { val, digits: Digits::Padic(ds) } => {
                let s: Vec<String> = ds.iter().map(u64::to_string).collect();
                write!(f, "[{}]*p^{val}", s.join(","))
            }
            Repr::Finite { val, digits: Digits::Laurent(ds) } => {
                let s: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
                write!(f, "[{}]*t^{val}", s.join(","))
            }
        }
    }
}

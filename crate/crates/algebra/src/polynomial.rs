use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};
use std::fmt;

/// Dense univariate polynomial over an exact coefficient field.
///
/// Coefficients are stored low-to-high with a nonzero leading entry; the
/// zero polynomial is the empty vector and has degree "minus infinity",
/// surfaced as `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map(Coeff::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial `c` (zero if `c` is zero).
    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * X^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` standing for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| *c == c.one_like()).unwrap_or(false)
    }

    fn check_same_field(&self, other: &Self) -> Result<()> {
        match (self.leading(), other.leading()) {
            (Some(a), Some(b)) if !a.same_field(b) => Err(AlgebraError::IncompatibleFields),
            _ => Ok(()),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.try_add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Ok(Self::new(out))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(Coeff::neg_val).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(Self::new(out))
    }

    pub fn scale(&self, c: &C) -> Result<Self> {
        let coeffs: Result<Vec<C>> = self.coeffs.iter().map(|a| a.try_mul(c)).collect();
        Ok(Self::new(coeffs?))
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divmod(&self, rhs: &Self) -> Result<(Self, Self)> {
        self.check_same_field(rhs)?;
        let d = rhs.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = rhs.leading().unwrap().one_like().try_div(rhs.leading().unwrap())?;
        let mut rem = self.clone();
        let mut quot_coeffs = match self.degree() {
            Some(n) if n >= d => vec![self.coeffs[0].zero_like(); n - d + 1],
            _ => return Ok((Self::zero(), rem)),
        };
        while let Some(n) = rem.degree() {
            if n < d {
                break;
            }
            let factor = rem.leading().unwrap().try_mul(&lc_inv)?;
            quot_coeffs[n - d] = factor.clone();
            let shifted = Self::monomial(factor, n - d).mul(rhs)?;
            rem = rem.sub(&shifted)?;
        }
        Ok((Self::new(quot_coeffs), rem))
    }

    pub fn rem(&self, rhs: &Self) -> Result<Self> {
        Ok(self.divmod(rhs)?.1)
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn make_monic(&self) -> Result<Self> {
        match self.leading() {
            None => Ok(Self::zero()),
            Some(lc) => {
                let inv = lc.one_like().try_div(lc)?;
                self.scale(&inv)
            }
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs: Vec<C> =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_usize(i)).collect();
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &C) -> Result<C> {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(x)?.try_add(c)?;
        }
        Ok(acc)
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Result<Self> {
        let one = match m.leading() {
            Some(lc) => Self::constant(lc.one_like()),
            None => return Err(AlgebraError::DivisionByZero),
        };
        let mut acc = one;
        let mut base = self.rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(acc)
    }
}

impl<C: Coeff + Ord> PartialOrd for Polynomial<C> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficient vectors; a total order used for
/// canonical carrier enumeration.
impl<C: Coeff + Ord> Ord for Polynomial<C> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let s = c.to_string();
            let wrapped = if s.contains('+') || s.contains('-') { format!("({s})") } else { s };
            match i {
                0 => write!(f, "{wrapped}")?,
                1 if wrapped == "1" => write!(f, "X")?,
                1 => write!(f, "{wrapped}*X")?,
                _ if wrapped == "1" => write!(f, "X^{i}")?,
                _ => write!(f, "{wrapped}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor. `gcd(f, 0)` is the monic associate of `f`
/// and `gcd(0, 0) = 0`. A gcd of degree 0 certifies coprimality; in
/// particular `gcd(f, f')` of degree 0 certifies separability of `f`.
pub fn poly_gcd<C: Coeff>(a: &Polynomial<C>, b: &Polynomial<C>) -> Result<Polynomial<C>> {
    if let (Some(x), Some(y)) = (a.leading(), b.leading()) {
        if !x.same_field(y) {
            return Err(AlgebraError::IncompatibleFields);
        }
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1)?;
        r0 = std::mem::replace(&mut r1, r);
    }
    r0.make_monic()
}

/// Resultant of `f` and `g`: the determinant of their Sylvester matrix.
/// For monic `f` it equals the product of `g` over the roots of `f` with
/// multiplicity. `f` must be nonzero.
pub fn poly_resultant<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>) -> Result<C> {
    let m = f.degree().ok_or(AlgebraError::UndefinedResultant)?;
    f.check_same_field(g)?;
    let one = f.leading().unwrap().one_like();
    let zero = one.zero_like();
    let n = match g.degree() {
        None => {
            // Res(f, 0): zero unless f is a nonzero constant (empty matrix)
            return Ok(if m == 0 { one } else { zero });
        }
        Some(n) => n,
    };
    if m == 0 {
        return pow_coeff(f.leading().unwrap(), n);
    }
    if n == 0 {
        return pow_coeff(g.leading().unwrap(), m);
    }
    let size = m + n;
    // Sylvester matrix: n rows of f's coefficients (high-to-low), then m of g's.
    let mut mat = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    determinant(mat, &one)
}

fn pow_coeff<C: Coeff>(c: &C, mut e: usize) -> Result<C> {
    let mut acc = c.one_like();
    let mut base = c.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.try_mul(&base)?;
        }
        e >>= 1;
        if e > 0 {
            base = base.try_mul(&base)?;
        }
    }
    Ok(acc)
}

/// Determinant by Gaussian elimination over the coefficient field.
fn determinant<C: Coeff>(mut m: Vec<Vec<C>>, one: &C) -> Result<C> {
    let n = m.len();
    let mut det = one.clone();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(one.zero_like()),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = det.neg_val();
        }
        let pivot = m[col][col].clone();
        det = det.try_mul(&pivot)?;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].try_div(&pivot)?;
            for k in col..n {
                let sub = m[col][k].try_mul(&factor)?;
                m[row][k] = m[row][k].try_sub(&sub)?;
            }
        }
    }
    Ok(det)
}

/// Discriminant: `(-1)^(d(d-1)/2) * Res(f, f') / lc(f)`. For monic `f` this
/// is the product of squared root differences. Degree must be at least 1.
pub fn poly_discriminant<C: Coeff>(f: &Polynomial<C>) -> Result<C> {
    let d = f.degree().ok_or(AlgebraError::UndefinedDiscriminant)?;
    if d == 0 {
        return Err(AlgebraError::UndefinedDiscriminant);
    }
    let res = poly_resultant(f, &f.derivative())?;
    let signed = if (d * (d - 1) / 2) % 2 == 1 { res.neg_val() } else { res };
    signed.try_div(f.leading().unwrap())
}

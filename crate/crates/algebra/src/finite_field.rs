use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};
use std::fmt;
use std::sync::Arc;

/// Deterministic primality test by trial division; adequate for the small
/// characteristics this workbench operates on.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factors `q` as `p^n` with `p` prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            let mut n = 0usize;
            while m.is_multiple_of(p) {
                m /= p;
                n += 1;
            }
            return if m == 1 { Some((p, n)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// ---------------------------------------------------------------------------
// Dense vector arithmetic over F_p. Coefficients are u64 values in [0, p),
// stored low-to-high with no trailing zeros.
// ---------------------------------------------------------------------------

fn pm_add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn pm_sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

fn pm_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pm_inv(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(AlgebraError::DivisionByZero);
    }
    // extended Euclid on (a, p)
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "p must be prime and a nonzero");
    Ok(t.rem_euclid(p as i128) as u64)
}

pub(crate) fn pv_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn pv_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = pm_add(x, y, p);
    }
    pv_trim(&mut out);
    out
}

pub(crate) fn pv_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = pm_sub(x, y, p);
    }
    pv_trim(&mut out);
    out
}

pub(crate) fn pv_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = pm_add(out[i + j], pm_mul(x, y, p), p);
        }
    }
    pv_trim(&mut out);
    out
}

/// Remainder of `a` modulo `m` (m nonzero, any leading coefficient).
pub(crate) fn pv_rem(a: &[u64], m: &[u64], p: u64) -> Result<Vec<u64>> {
    if m.is_empty() {
        return Err(AlgebraError::DivisionByZero);
    }
    let lc_inv = pm_inv(*m.last().unwrap(), p)?;
    let mut r: Vec<u64> = a.to_vec();
    pv_trim(&mut r);
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = pm_mul(*r.last().unwrap(), lc_inv, p);
        for (i, &mc) in m.iter().enumerate() {
            r[shift + i] = pm_sub(r[shift + i], pm_mul(factor, mc, p), p);
        }
        pv_trim(&mut r);
    }
    Ok(r)
}

/// Inverse of `a` modulo `m` over F_p via extended Euclid.
pub(crate) fn pv_inv_mod(a: &[u64], m: &[u64], p: u64) -> Result<Vec<u64>> {
    if a.is_empty() {
        return Err(AlgebraError::DivisionByZero);
    }
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        // divide r0 by r1
        let lc_inv = pm_inv(*r1.last().unwrap(), p)?;
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        while rem.len() >= r1.len() && !rem.is_empty() {
            let shift = rem.len() - r1.len();
            let factor = pm_mul(*rem.last().unwrap(), lc_inv, p);
            q[shift] = factor;
            for (i, &mc) in r1.iter().enumerate() {
                rem[shift + i] = pm_sub(rem[shift + i], pm_mul(factor, mc, p), p);
            }
            pv_trim(&mut rem);
        }
        pv_trim(&mut q);
        let new_s = pv_sub(&s0, &pv_mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, new_s);
    }
    // r0 is the gcd; it must be a nonzero constant for an inverse to exist
    if r0.len() != 1 {
        return Err(AlgebraError::DivisionByZero);
    }
    let scale = pm_inv(r0[0], p)?;
    let mut out: Vec<u64> = s0.iter().map(|&c| pm_mul(c, scale, p)).collect();
    pv_trim(&mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// FiniteFieldSpec / FieldElement
// ---------------------------------------------------------------------------

/// Description of a finite field F_{p^n} = F_p[x]/(modulus).
///
/// The modulus is a monic irreducible polynomial of degree n over F_p,
/// stored as a low-to-high coefficient vector of length n+1. Prime fields
/// use the degree-1 modulus x.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteFieldSpec {
    p: u64,
    n: usize,
    modulus: Vec<u64>,
}

impl FiniteFieldSpec {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Arc::new(Self { p, n: 1, modulus: vec![0, 1] }))
    }

    /// F_p[x]/(modulus); the modulus must be monic irreducible over F_p.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        let mut m = modulus;
        for c in m.iter_mut() {
            *c %= p;
        }
        pv_trim(&mut m);
        if m.len() < 2 || *m.last().unwrap() != 1 {
            return Err(AlgebraError::BadModulus);
        }
        let n = m.len() - 1;
        let spec = Arc::new(Self { p, n, modulus: m });
        if n > 1 {
            let poly = spec_modulus_as_prime_poly(&spec)?;
            if !crate::irreducible::is_irreducible(&poly)? {
                return Err(AlgebraError::ReducibleModulus);
            }
        }
        Ok(spec)
    }

    /// F_q for a prime power q, with the deterministic modulus returned by
    /// `find_irreducible` so that independently built towers coincide.
    pub fn gf(q: u64) -> Result<Arc<Self>> {
        let (p, n) =
            factor_prime_power(q).ok_or(AlgebraError::Invalid(format!("{q} is not a prime power")))?;
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if n == 1 {
            return Self::prime(p);
        }
        let base = Self::prime(p)?;
        let m = crate::irreducible::find_irreducible(&base, n)?;
        let coeffs: Vec<u64> = m.coeffs().iter().map(|c| c.coeffs()[0]).collect();
        Self::new(p, coeffs)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.n
    }

    /// Field order q = p^n.
    pub fn order(&self) -> u64 {
        self.p.pow(self.n as u32)
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { spec: Arc::clone(self), coeffs: vec![0; self.n] }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1)
    }

    /// The residue of an integer, embedded as a constant.
    pub fn from_int(self: &Arc<Self>, v: u64) -> FieldElement {
        let mut coeffs = vec![0; self.n];
        coeffs[0] = v % self.p;
        FieldElement { spec: Arc::clone(self), coeffs }
    }

    /// Element from a coefficient vector (low-to-high); longer vectors are
    /// reduced modulo the field modulus.
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement> {
        let mut v: Vec<u64> = coeffs.iter().map(|&c| c % self.p).collect();
        pv_trim(&mut v);
        if v.len() > self.n {
            v = pv_rem(&v, &self.modulus, self.p)?;
        }
        v.resize(self.n, 0);
        Ok(FieldElement { spec: Arc::clone(self), coeffs: v })
    }

    /// All q elements in lexicographic order of their coefficient vectors
    /// (coordinate 0 most significant), which is also the canonical element
    /// order used everywhere in this workbench.
    pub fn elements(self: &Arc<Self>) -> Vec<FieldElement> {
        let q = self.order() as usize;
        let mut out = Vec::with_capacity(q);
        let mut digits = vec![0u64; self.n];
        loop {
            out.push(FieldElement { spec: Arc::clone(self), coeffs: digits.clone() });
            // odometer with the last coordinate fastest: yields vector-lex order
            let mut i = self.n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.p {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    fn same_spec(a: &FieldElement, b: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&a.spec, &b.spec) || a.spec == b.spec {
            Ok(())
        } else {
            Err(AlgebraError::IncompatibleFields)
        }
    }
}

fn spec_modulus_as_prime_poly(spec: &Arc<FiniteFieldSpec>) -> Result<crate::polynomial::Polynomial<FieldElement>> {
    let prime = FiniteFieldSpec::prime(spec.p)?;
    let coeffs: Result<Vec<FieldElement>> =
        spec.modulus.iter().map(|&c| prime.element(&[c])).collect();
    Ok(crate::polynomial::Polynomial::new(coeffs?))
}

/// Element of a finite field, always fully reduced. Equality is
/// coefficient-wise and requires matching specs.
#[derive(Debug, Clone)]
pub struct FieldElement {
    spec: Arc<FiniteFieldSpec>,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
            && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FiniteFieldSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        FiniteFieldSpec::same_spec(self, rhs)?;
        let mut v = pv_add(&self.coeffs, &rhs.coeffs, self.spec.p);
        v.resize(self.spec.n, 0);
        Ok(Self { spec: Arc::clone(&self.spec), coeffs: v })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        FiniteFieldSpec::same_spec(self, rhs)?;
        let mut v = pv_sub(&self.coeffs, &rhs.coeffs, self.spec.p);
        v.resize(self.spec.n, 0);
        Ok(Self { spec: Arc::clone(&self.spec), coeffs: v })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        FiniteFieldSpec::same_spec(self, rhs)?;
        let prod = pv_mul(&self.coeffs, &rhs.coeffs, self.spec.p);
        let mut v = pv_rem(&prod, &self.spec.modulus, self.spec.p)?;
        v.resize(self.spec.n, 0);
        Ok(Self { spec: Arc::clone(&self.spec), coeffs: v })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(&rhs.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut a = self.coeffs.clone();
        pv_trim(&mut a);
        let mut v = pv_inv_mod(&a, &self.spec.modulus, self.spec.p)?;
        v.resize(self.spec.n, 0);
        Ok(Self { spec: Arc::clone(&self.spec), coeffs: v })
    }

    pub fn negate(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| (self.spec.p - c) % self.spec.p).collect();
        Self { spec: Arc::clone(&self.spec), coeffs }
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut acc = self.spec.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same spec");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same spec");
            }
        }
        acc
    }

    /// Multiplicative order; the element must be nonzero.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut acc = self.clone();
        let mut k = 1u64;
        while !acc.is_one() {
            acc = acc.checked_mul(self)?;
            k += 1;
        }
        Ok(k)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "a")?,
                1 => write!(f, "{c}a")?,
                _ if c == 1 => write!(f, "a^{i}")?,
                _ => write!(f, "{c}a^{i}")?,
            }
        }
        Ok(())
    }
}

impl Coeff for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.spec.zero()
    }
    fn one_like(&self) -> Self {
        self.spec.one()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }
    fn neg_val(&self) -> Self {
        self.negate()
    }
    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }
}

// ---------------------------------------------------------------------------
// Carrier abstraction shared by FiniteFieldSpec and ExtensionSpec
// ---------------------------------------------------------------------------

/// A finite field whose full carrier can be enumerated. Operations assume
/// both arguments belong to this carrier; constructions validate inputs at
/// the boundary.
pub trait FieldCarrier {
    type Elem: Clone + Eq + Ord + std::hash::Hash + fmt::Debug;

    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;
    /// All elements in canonical (coefficient-lexicographic) order; the zero
    /// element comes first.
    fn elements(&self) -> Vec<Self::Elem>;
    fn zero_elem(&self) -> Self::Elem;
    fn one_elem(&self) -> Self::Elem;
    fn add_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg_elem(&self, a: &Self::Elem) -> Self::Elem;
    fn inv_elem(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn elem_is_zero(&self, a: &Self::Elem) -> bool;
    /// Flattened coefficient vector over the prime field, used for
    /// canonical lexicographic comparisons.
    fn coeff_key(&self, a: &Self::Elem) -> Vec<u64>;
    fn label(&self, a: &Self::Elem) -> String;
}

impl FieldCarrier for Arc<FiniteFieldSpec> {
    type Elem = FieldElement;

    fn order(&self) -> u64 {
        FiniteFieldSpec::order(self)
    }
    fn characteristic(&self) -> u64 {
        FiniteFieldSpec::characteristic(self)
    }
    fn elements(&self) -> Vec<FieldElement> {
        FiniteFieldSpec::elements(self)
    }
    fn zero_elem(&self) -> FieldElement {
        self.zero()
    }
    fn one_elem(&self) -> FieldElement {
        self.one()
    }
    fn add_elems(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.checked_add(b).expect("carrier elements")
    }
    fn mul_elems(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.checked_mul(b).expect("carrier elements")
    }
    fn neg_elem(&self, a: &FieldElement) -> FieldElement {
        a.negate()
    }
    fn inv_elem(&self, a: &FieldElement) -> Result<FieldElement> {
        a.inverse()
    }
    fn elem_is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn coeff_key(&self, a: &FieldElement) -> Vec<u64> {
        a.coeffs().to_vec()
    }
    fn label(&self, a: &FieldElement) -> String {
        a.to_string()
    }
}

use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};
use crate::finite_field::{FieldCarrier, FieldElement, FiniteFieldSpec};
use crate::irreducible::is_irreducible;
use crate::polynomial::Polynomial;
use std::fmt;
use std::sync::Arc;

/// An explicit extension base[Y]/(modulus) of a finite field.
///
/// Elements are coefficient vectors over the base of length equal to the
/// extension degree. Arithmetic reduces modulo the (monic, irreducible)
/// modulus. Degree 1 gives a copy of the base, which keeps tower-building
/// code uniform.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    base: Arc<FiniteFieldSpec>,
    modulus: Polynomial<FieldElement>,
    degree: usize,
}

impl ExtensionSpec {
    pub fn new(base: Arc<FiniteFieldSpec>, modulus: Polynomial<FieldElement>) -> Result<Arc<Self>> {
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(AlgebraError::BadModulus),
        };
        if !modulus.is_monic() {
            return Err(AlgebraError::BadModulus);
        }
        if let Some(lc) = modulus.leading() {
            if lc.spec() != &base && !Arc::ptr_eq(lc.spec(), &base) {
                return Err(AlgebraError::IncompatibleFields);
            }
        }
        if degree > 1 && !is_irreducible(&modulus)? {
            return Err(AlgebraError::ReducibleModulus);
        }
        Ok(Arc::new(Self { base, modulus, degree }))
    }

    pub fn base(&self) -> &Arc<FiniteFieldSpec> {
        &self.base
    }

    pub fn modulus(&self) -> &Polynomial<FieldElement> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.base.order().pow(self.degree as u32)
    }

    pub fn zero(self: &Arc<Self>) -> ExtElement {
        ExtElement { spec: Arc::clone(self), coeffs: vec![self.base.zero(); self.degree] }
    }

    pub fn one(self: &Arc<Self>) -> ExtElement {
        self.embed_base(&self.base.one()).expect("base one")
    }

    /// The base field sitting inside the extension as constants.
    pub fn embed_base(self: &Arc<Self>, c: &FieldElement) -> Result<ExtElement> {
        if c.spec() != &self.base && !Arc::ptr_eq(c.spec(), &self.base) {
            return Err(AlgebraError::IncompatibleFields);
        }
        let mut coeffs = vec![self.base.zero(); self.degree];
        coeffs[0] = c.clone();
        Ok(ExtElement { spec: Arc::clone(self), coeffs })
    }

    /// Element from base-field coefficients (low-to-high); longer vectors
    /// are reduced modulo the modulus.
    pub fn element(self: &Arc<Self>, coeffs: &[FieldElement]) -> Result<ExtElement> {
        for c in coeffs {
            if c.spec() != &self.base && !Arc::ptr_eq(c.spec(), &self.base) {
                return Err(AlgebraError::IncompatibleFields);
            }
        }
        let poly = Polynomial::new(coeffs.to_vec());
        self.from_poly(&poly)
    }

    pub fn from_poly(self: &Arc<Self>, p: &Polynomial<FieldElement>) -> Result<ExtElement> {
        let reduced = p.rem(&self.modulus)?;
        let mut coeffs = reduced.coeffs().to_vec();
        coeffs.resize(self.degree, self.base.zero());
        Ok(ExtElement { spec: Arc::clone(self), coeffs })
    }

    fn same_spec(a: &ExtElement, b: &ExtElement) -> Result<()> {
        if Arc::ptr_eq(&a.spec, &b.spec) || a.spec == b.spec {
            Ok(())
        } else {
            Err(AlgebraError::IncompatibleFields)
        }
    }
}

/// Element of an explicit extension field.
#[derive(Debug, Clone)]
pub struct ExtElement {
    spec: Arc<ExtensionSpec>,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
            && self.coeffs == other.coeffs
    }
}

impl Eq for ExtElement {}

impl PartialOrd for ExtElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl std::hash::Hash for ExtElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl ExtElement {
    pub fn spec(&self) -> &Arc<ExtensionSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Polynomial<FieldElement> {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(FieldElement::is_zero)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        ExtensionSpec::same_spec(self, rhs)?;
        let coeffs: Result<Vec<FieldElement>> =
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.checked_add(b)).collect();
        Ok(Self { spec: Arc::clone(&self.spec), coeffs: coeffs? })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        ExtensionSpec::same_spec(self, rhs)?;
        let coeffs: Result<Vec<FieldElement>> =
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.checked_sub(b)).collect();
        Ok(Self { spec: Arc::clone(&self.spec), coeffs: coeffs? })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        ExtensionSpec::same_spec(self, rhs)?;
        let prod = self.to_poly().mul(&rhs.to_poly())?;
        self.spec.from_poly(&prod)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(&rhs.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let inv = poly_inv_mod(&self.to_poly(), &self.spec.modulus)?;
        self.spec.from_poly(&inv)
    }

    pub fn negate(&self) -> Self {
        let coeffs = self.coeffs.iter().map(FieldElement::negate).collect();
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
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let s = c.to_string();
            let wrapped = if s.contains('+') { format!("({s})") } else { s };
            match i {
                0 => write!(f, "{wrapped}")?,
                1 if wrapped == "1" => write!(f, "y")?,
                1 => write!(f, "{wrapped}y")?,
                _ if wrapped == "1" => write!(f, "y^{i}")?,
                _ => write!(f, "{wrapped}y^{i}")?,
            }
        }
        Ok(())
    }
}

impl Coeff for ExtElement {
    fn is_zero(&self) -> bool {
        ExtElement::is_zero(self)
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

/// Inverse of `a` modulo `m` by extended Euclid over any coefficient field.
fn poly_inv_mod<C: Coeff>(a: &Polynomial<C>, m: &Polynomial<C>) -> Result<Polynomial<C>> {
    if a.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let one = Polynomial::constant(m.leading().unwrap().one_like());
    let (mut r0, mut r1) = (m.clone(), a.rem(m)?);
    let (mut s0, mut s1) = (Polynomial::zero(), one);
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        let new_s = s0.sub(&q.mul(&s1)?)?;
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, new_s);
    }
    if r0.degree() != Some(0) {
        return Err(AlgebraError::DivisionByZero);
    }
    let scale = r0.leading().unwrap().one_like().try_div(r0.leading().unwrap())?;
    s0.scale(&scale)
}

impl FieldCarrier for Arc<ExtensionSpec> {
    type Elem = ExtElement;

    fn order(&self) -> u64 {
        ExtensionSpec::order(self)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn elements(&self) -> Vec<ExtElement> {
        let base_els = self.base.elements();
        let d = self.degree;
        let mut out = Vec::with_capacity(ExtensionSpec::order(self) as usize);
        let mut digits = vec![0usize; d];
        loop {
            let coeffs: Vec<FieldElement> = digits.iter().map(|&i| base_els[i].clone()).collect();
            out.push(ExtElement { spec: Arc::clone(self), coeffs });
            let mut i = d;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < base_els.len() {
                    break;
                }
                digits[i] = 0;
            }
        }
    }
    fn zero_elem(&self) -> ExtElement {
        self.zero()
    }
    fn one_elem(&self) -> ExtElement {
        self.one()
    }
    fn add_elems(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        a.checked_add(b).expect("carrier elements")
    }
    fn mul_elems(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        a.checked_mul(b).expect("carrier elements")
    }
    fn neg_elem(&self, a: &ExtElement) -> ExtElement {
        a.negate()
    }
    fn inv_elem(&self, a: &ExtElement) -> Result<ExtElement> {
        a.inverse()
    }
    fn elem_is_zero(&self, a: &ExtElement) -> bool {
        a.is_zero()
    }
    fn coeff_key(&self, a: &ExtElement) -> Vec<u64> {
        a.coeffs.iter().flat_map(|c| c.coeffs().iter().copied()).collect()
    }
    fn label(&self, a: &ExtElement) -> String {
        a.to_string()
    }
}

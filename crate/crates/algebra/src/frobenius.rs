use crate::error::Result;
use crate::finite_field::{FieldElement, FiniteFieldSpec};
use std::sync::Arc;

/// The field automorphism x -> x^(p^k) of F_{p^n}.
///
/// Every automorphism of a finite field is of this form, so `k` ranges over
/// 0..n and out-of-range powers are normalized mod n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusAuto {
    spec: Arc<FiniteFieldSpec>,
    k: usize,
}

impl FrobeniusAuto {
    pub fn new(spec: Arc<FiniteFieldSpec>, k: usize) -> Self {
        let n = spec.extension_degree();
        Self { spec, k: k % n }
    }

    pub fn identity(spec: Arc<FiniteFieldSpec>) -> Self {
        Self::new(spec, 0)
    }

    pub fn spec(&self) -> &Arc<FiniteFieldSpec> {
        &self.spec
    }

    pub fn power(&self) -> usize {
        self.k
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.spec() != &self.spec && !Arc::ptr_eq(x.spec(), &self.spec) {
            return Err(crate::error::AlgebraError::IncompatibleFields);
        }
        let e = (self.spec.characteristic() as u128).pow(self.k as u32);
        Ok(x.pow(e))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(Arc::clone(&self.spec), self.k + other.k)
    }

    pub fn inverse(&self) -> Self {
        let n = self.spec.extension_degree();
        Self::new(Arc::clone(&self.spec), (n - self.k) % n)
    }

    /// Order in the automorphism group Aut(F_{p^n}) = Z/n.
    pub fn order(&self) -> usize {
        let n = self.spec.extension_degree();
        if self.k == 0 {
            1
        } else {
            n / gcd(n, self.k)
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All automorphisms of the field, identity first.
pub fn automorphism_group(spec: &Arc<FiniteFieldSpec>) -> Vec<FrobeniusAuto> {
    (0..spec.extension_degree()).map(|k| FrobeniusAuto::new(Arc::clone(spec), k)).collect()
}

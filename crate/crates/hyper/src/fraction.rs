use crate::error::{HyperError, Result};
use crate::table::MultiOpTable;
use hyperlab_algebra::{poly_gcd, Coeff, FieldElement, FiniteFieldSpec, Polynomial};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// The factor hyperring F_q[X]_{F_q^x}: cosets of the polynomial ring by
/// the nonzero constants, an integral hyperdomain. Cosets are represented
/// by their monic member (or zero) and operations are computed on demand,
/// degree by degree, since the carrier is infinite.
#[derive(Debug, Clone)]
pub struct PolyCosetRing {
    base: Arc<FiniteFieldSpec>,
}

impl PolyCosetRing {
    pub fn new(base: Arc<FiniteFieldSpec>) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &Arc<FiniteFieldSpec> {
        &self.base
    }

    fn units(&self) -> Vec<FieldElement> {
        self.base.elements().into_iter().filter(|e| !e.is_zero()).collect()
    }

    /// Canonical coset representative: the monic associate.
    pub fn coset(&self, p: &Polynomial<FieldElement>) -> Result<Polynomial<FieldElement>> {
        Ok(p.make_monic()?)
    }

    /// The hypersum fT ⊞ gT = {(af + bg)T : a, b units}, as sorted
    /// canonical representatives.
    pub fn coset_sum(
        &self,
        f: &Polynomial<FieldElement>,
        g: &Polynomial<FieldElement>,
    ) -> Result<BTreeSet<Polynomial<FieldElement>>> {
        let mut out = BTreeSet::new();
        for a in self.units() {
            let af = f.scale(&a)?;
            for b in self.units() {
                let z = af.add(&g.scale(&b)?)?;
                out.insert(self.coset(&z)?);
            }
        }
        Ok(out)
    }

    pub fn coset_mul(
        &self,
        f: &Polynomial<FieldElement>,
        g: &Polynomial<FieldElement>,
    ) -> Result<Polynomial<FieldElement>> {
        self.coset(&f.mul(g)?)
    }

    /// All coset representatives of degree at most `deg`: zero plus every
    /// monic polynomial, in canonical order.
    pub fn cosets_up_to(&self, deg: usize) -> Vec<Polynomial<FieldElement>> {
        let mut out = vec![Polynomial::zero()];
        out.extend(monic_polys(&self.base, deg));
        out
    }
}

/// All monic polynomials of degree 0..=deg in canonical order.
fn monic_polys(base: &Arc<FiniteFieldSpec>, deg: usize) -> Vec<Polynomial<FieldElement>> {
    let els = base.elements();
    let mut out = Vec::new();
    for d in 0..=deg {
        let mut idx = vec![0usize; d];
        loop {
            let mut coeffs: Vec<FieldElement> = idx.iter().map(|&i| els[i].clone()).collect();
            coeffs.push(base.one());
            out.push(Polynomial::new(coeffs));
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                idx[i] += 1;
                if idx[i] < els.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    out.sort();
    out
}

/// A class of the fraction hyperfield Fr(F_q[X]_{F_q^x}) in canonical form:
/// numerator and denominator monic (numerator zero for the zero class),
/// coprime, denominator nonzero. The representation is unique per class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundedFraction {
    num: Polynomial<FieldElement>,
    den: Polynomial<FieldElement>,
}

impl BoundedFraction {
    pub fn new(num: Polynomial<FieldElement>, den: Polynomial<FieldElement>) -> Result<Self> {
        if den.is_zero() {
            return Err(HyperError::Algebra(hyperlab_algebra::AlgebraError::DivisionByZero));
        }
        if num.is_zero() {
            let one = Polynomial::constant(den.leading().unwrap().one_like());
            return Ok(Self { num: Polynomial::zero(), den: one });
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divmod(&g)?.0, den.divmod(&g)?.0)
        };
        Ok(Self { num: num.make_monic()?, den: den.make_monic()? })
    }

    pub fn zero(base: &Arc<FiniteFieldSpec>) -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::constant(base.one()) }
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

    fn within_cap(&self, cap: usize) -> bool {
        self.num.degree().map(|d| d <= cap).unwrap_or(true)
            && self.den.degree().map(|d| d <= cap).unwrap_or(true)
    }
}

/// Bounded-degree slice of the fraction hyperfield of F_q[X]_{F_q^x}.
///
/// The carrier holds every class whose reduced numerator and denominator
/// have degree at most the cap. Sums are computed from the fraction-field
/// definition x/x' ⊞ y/y' = { z/(x'y') : z ∈ xy' ⊞ yx' }; members whose
/// reduced form escapes the cap are not representable, so the affected
/// (i, j) pairs are flagged in `escaped` instead of being silently
/// truncated. No multiplication table is carried: products escape every
/// finite cap, and the bounded construction certifies the additive side.
#[derive(Debug, Clone)]
pub struct FractionTable {
    pub table: MultiOpTable,
    pub fractions: Vec<BoundedFraction>,
    pub escaped: BTreeSet<(usize, usize)>,
    pub cap: usize,
}

impl FractionTable {
    pub fn index_of(&self, f: &BoundedFraction) -> Option<usize> {
        self.fractions.binary_search(f).ok()
    }
}

/// Builds the bounded fraction hyperfield at the given degree cap.
pub fn build_fraction_hyperfield(ring: &PolyCosetRing, cap: usize) -> Result<FractionTable> {
    if cap < 1 {
        return Err(HyperError::BadCap);
    }
    let base = ring.base().clone();
    let monics = monic_polys(&base, cap);
    let mut fractions = vec![BoundedFraction::zero(&base)];
    for num in &monics {
        for den in &monics {
            if poly_gcd(num, den)?.degree() == Some(0) {
                fractions.push(BoundedFraction { num: num.clone(), den: den.clone() });
            }
        }
    }
    fractions.sort();
    fractions.dedup();
    let index: BTreeMap<BoundedFraction, usize> =
        fractions.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    debug_assert_eq!(index.get(&BoundedFraction::zero(&base)), Some(&0));

    let size = fractions.len();
    let mut sums: Vec<Vec<usize>> = vec![Vec::new(); size * size];
    let mut escaped = BTreeSet::new();
    for i in 0..size {
        for j in i..size {
            let (x, xd) = (&fractions[i].num, &fractions[i].den);
            let (y, yd) = (&fractions[j].num, &fractions[j].den);
            let shared_den = xd.mul(yd)?;
            let lhs = if x.is_zero() { Polynomial::zero() } else { x.mul(yd)? };
            let rhs = if y.is_zero() { Polynomial::zero() } else { y.mul(xd)? };
            let mut set = Vec::new();
            // xy' ⊞ yx' in the coset ring; zero operands collapse to
            // singletons on their own
            for z in ring.coset_sum(&lhs, &rhs)? {
                let frac = if z.is_zero() {
                    BoundedFraction::zero(&base)
                } else {
                    BoundedFraction::new(z, shared_den.clone())?
                };
                if frac.within_cap(cap) {
                    set.push(index[&frac]);
                } else {
                    escaped.insert((i, j));
                    escaped.insert((j, i));
                }
            }
            sums[i * size + j] = set.clone();
            sums[j * size + i] = set;
        }
    }
    let labels = fractions
        .iter()
        .map(|f| {
            if f.is_zero() {
                "0".to_string()
            } else {
                format!("({})/({})", f.num(), f.den())
            }
        })
        .collect();
    let table = MultiOpTable::from_parts(size, 0, sums, None)?.with_labels(labels);
    Ok(FractionTable { table, fractions, escaped, cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3_ring() -> PolyCosetRing {
        PolyCosetRing::new(FiniteFieldSpec::prime(3).unwrap())
    }

    #[test]
    fn cap_zero_rejected() {
        assert!(matches!(build_fraction_hyperfield(&f3_ring(), 0), Err(HyperError::BadCap)));
    }

    #[test]
    fn carrier_count_at_cap_2_over_f3() {
        // 13 monic polynomials of degree <= 2; coprime ordered pairs + zero
        let ft = build_fraction_hyperfield(&f3_ring(), 2).unwrap();
        assert_eq!(ft.table.size(), 122);
        assert!(!ft.escaped.is_empty());
    }

    #[test]
    fn zero_is_neutral() {
        // x/1 ⊞ 0/1 = {x/1}
        let ft = build_fraction_hyperfield(&f3_ring(), 2).unwrap();
        for i in 0..ft.table.size() {
            assert_eq!(ft.table.sum(i, 0), &[i]);
            assert_eq!(ft.table.sum(0, i), &[i]);
        }
    }

    #[test]
    fn embedding_preserves_membership_on_in_cap_sums() {
        // x -> x/1 from the coset ring, exhausting degree <= cap - 1
        let ring = f3_ring();
        let cap = 2usize;
        let ft = build_fraction_hyperfield(&ring, cap).unwrap();
        let base = ring.base().clone();
        let small = ring.cosets_up_to(cap - 1);
        let all = ring.cosets_up_to(cap);
        for f in &small {
            for g in &small {
                let fi = ft.index_of(&embed(f, &base)).unwrap();
                let gi = ft.index_of(&embed(g, &base)).unwrap();
                assert!(
                    !ft.escaped.contains(&(fi, gi)),
                    "sums of degree <= cap-1 embeddings stay in cap"
                );
                let ring_sum = ring.coset_sum(f, g).unwrap();
                for z in &all {
                    let in_ring = ring_sum.contains(z);
                    let zi = ft.index_of(&embed(z, &base)).unwrap();
                    let in_fraction = ft.table.sum_contains(fi, gi, zi);
                    assert_eq!(in_ring, in_fraction, "membership mismatch at {f} + {g} ∋ {z}");
                }
            }
        }
    }

    fn embed(p: &Polynomial<FieldElement>, base: &Arc<FiniteFieldSpec>) -> BoundedFraction {
        if p.is_zero() {
            BoundedFraction::zero(base)
        } else {
            BoundedFraction::new(p.clone(), Polynomial::constant(base.one())).unwrap()
        }
    }

    #[test]
    fn bounded_associativity_where_determined() {
        // (x ⊞ y) ⊞ z = x ⊞ (y ⊞ z) for every in-cap triple whose
        // intermediate sums stay within the cap, exhaustive at cap 2
        let ft = build_fraction_hyperfield(&f3_ring(), 2).unwrap();
        let n = ft.table.size();
        let masks = ft.table.sum_masks();
        let mask = |i: usize, j: usize| &masks[i * n + j];
        let mut determined = 0usize;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // left: (i ⊞ j) ⊞ k
                    let left = if ft.escaped.contains(&(i, j)) {
                        None
                    } else {
                        let mut acc = crate::table::IndexSet::empty(n);
                        let mut ok = true;
                        for w in ft.table.sum(i, j) {
                            if ft.escaped.contains(&(*w, k)) {
                                ok = false;
                                break;
                            }
                            acc.union_with(mask(*w, k));
                        }
                        ok.then_some(acc)
                    };
                    // right: i ⊞ (j ⊞ k)
                    let right = if ft.escaped.contains(&(j, k)) {
                        None
                    } else {
                        let mut acc = crate::table::IndexSet::empty(n);
                        let mut ok = true;
                        for w in ft.table.sum(j, k) {
                            if ft.escaped.contains(&(i, *w)) {
                                ok = false;
                                break;
                            }
                            acc.union_with(mask(i, *w));
                        }
                        ok.then_some(acc)
                    };
                    if let (Some(l), Some(r)) = (left, right) {
                        determined += 1;
                        assert_eq!(l, r, "associativity broke at ({i},{j},{k})");
                    }
                }
            }
        }
        // measured: 34172 of 122^3 triples are fully determined at cap 2
        assert_eq!(determined, 34172);
    }
}

use crate::axioms::check_hyperring;
use crate::error::{HyperError, Result};
use crate::table::MultiOpTable;
use hyperlab_algebra::FieldCarrier;
use std::collections::HashMap;

/// The multiplicative subgroup of A^x generated by `gens`, computed by
/// closure. Errors if any generator is zero.
pub fn subgroup_generated<F: FieldCarrier>(field: &F, gens: &[F::Elem]) -> Result<Vec<F::Elem>> {
    for g in gens {
        if field.elem_is_zero(g) {
            return Err(HyperError::NotASubgroup("generator is zero".into()));
        }
    }
    let mut seen: Vec<F::Elem> = vec![field.one_elem()];
    let mut frontier = seen.clone();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = field.mul_elems(&x, g);
            if !seen.contains(&y) {
                seen.push(y.clone());
                frontier.push(y);
            }
        }
    }
    seen.sort_by_key(|e| field.coeff_key(e));
    Ok(seen)
}

/// Validates that an explicit element list is a subgroup of A^x: nonempty,
/// zero-free, containing one, and closed under multiplication (which in a
/// finite group forces closure under inverses).
pub fn validate_subgroup<F: FieldCarrier>(field: &F, t: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if t.is_empty() {
        return Err(HyperError::NotASubgroup("empty set".into()));
    }
    for x in t {
        if field.elem_is_zero(x) {
            return Err(HyperError::NotASubgroup("contains zero".into()));
        }
    }
    if !t.contains(&field.one_elem()) {
        return Err(HyperError::NotASubgroup("missing the unit".into()));
    }
    for x in t {
        for y in t {
            if !t.contains(&field.mul_elems(x, y)) {
                return Err(HyperError::NotASubgroup(format!(
                    "not closed: {} * {}",
                    field.label(x),
                    field.label(y)
                )));
            }
        }
    }
    let mut sorted = t.to_vec();
    sorted.sort_by_key(|e| field.coeff_key(e));
    sorted.dedup();
    Ok(sorted)
}

/// Every subgroup of the (cyclic) multiplicative group A^x, one per divisor
/// of q - 1, each sorted canonically. Used by the exhaustive lattice sweeps.
pub fn all_subgroups<F: FieldCarrier>(field: &F) -> Vec<Vec<F::Elem>> {
    let q = field.order();
    let group_order = q - 1;
    // find a generator of A^x by brute force
    let els = field.elements();
    let nonzero: Vec<&F::Elem> = els.iter().filter(|e| !field.elem_is_zero(e)).collect();
    let order_of = |x: &F::Elem| -> u64 {
        let mut acc = x.clone();
        let mut k = 1u64;
        while acc != field.one_elem() {
            acc = field.mul_elems(&acc, x);
            k += 1;
        }
        k
    };
    let gen = nonzero
        .iter()
        .find(|e| order_of(e) == group_order)
        .expect("finite field multiplicative group is cyclic");
    let mut out = Vec::new();
    for d in 1..=group_order {
        if !group_order.is_multiple_of(d) {
            continue;
        }
        // subgroup of order d generated by gen^((q-1)/d)
        let step = group_order / d;
        let mut pow = field.one_elem();
        let mut base = (*gen).clone();
        let mut e = step;
        // gen^step by square-and-multiply
        let mut acc = field.one_elem();
        while e > 0 {
            if e & 1 == 1 {
                acc = field.mul_elems(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = field.mul_elems(&base, &base);
            }
        }
        let mut sub = Vec::with_capacity(d as usize);
        for _ in 0..d {
            sub.push(pow.clone());
            pow = field.mul_elems(&pow, &acc);
        }
        sub.sort_by_key(|x| field.coeff_key(x));
        out.push(sub);
    }
    out
}

/// A factor hyperfield A_T together with the coset bookkeeping needed to
/// map field elements onto table indices.
#[derive(Debug, Clone)]
pub struct FactorTable<E: Clone + Eq + std::hash::Hash> {
    pub table: MultiOpTable,
    /// Canonical representative of each coset; index 0 is the zero coset.
    pub reps: Vec<E>,
    class_of: HashMap<E, usize>,
}

impl<E: Clone + Eq + std::hash::Hash> FactorTable<E> {
    /// Index of the coset containing `x`.
    pub fn class_of(&self, x: &E) -> Option<usize> {
        self.class_of.get(x).copied()
    }
}

/// Krasner's factor construction A_T for a finite field A and a subgroup T
/// of A^x: carrier {0} ∪ A^x/T with canonical (lexicographically least)
/// representatives, xT ⊞ yT = {zT | z = xt + ys for t, s in T} enumerated
/// exhaustively, and xT * yT = xyT. The result is verified against the
/// hyperring checker before being returned.
pub fn build_factor_hyperfield<F: FieldCarrier>(
    field: &F,
    t: &[F::Elem],
) -> Result<FactorTable<F::Elem>> {
    let t = validate_subgroup(field, t)?;
    let els = field.elements();

    // orbits of A^x under T, canonical rep = lexicographically least member
    let mut class_of: HashMap<F::Elem, usize> = HashMap::new();
    let mut reps: Vec<F::Elem> = vec![field.zero_elem()];
    class_of.insert(field.zero_elem(), 0);
    for x in &els {
        if field.elem_is_zero(x) || class_of.contains_key(x) {
            continue;
        }
        let mut orbit: Vec<F::Elem> = t.iter().map(|s| field.mul_elems(x, s)).collect();
        orbit.sort_by_key(|e| field.coeff_key(e));
        orbit.dedup();
        let idx = reps.len();
        reps.push(orbit[0].clone());
        for member in orbit {
            class_of.insert(member, idx);
        }
    }
    // the element scan is already canonical, so unit-coset reps come out sorted
    debug_assert!(reps_sorted(field, &reps));

    let size = reps.len();
    let mut sums: Vec<Vec<usize>> = vec![Vec::new(); size * size];
    for i in 0..size {
        for j in 0..size {
            let mut set = Vec::new();
            for ti in &t {
                let xt = field.mul_elems(&reps[i], ti);
                for sj in &t {
                    let ys = field.mul_elems(&reps[j], sj);
                    let z = field.add_elems(&xt, &ys);
                    set.push(class_of[&z]);
                }
            }
            sums[i * size + j] = set;
        }
    }
    let mut mul = vec![0usize; size * size];
    for i in 0..size {
        for j in 0..size {
            mul[i * size + j] = class_of[&field.mul_elems(&reps[i], &reps[j])];
        }
    }
    let labels: Vec<String> = reps.iter().map(|r| format!("{}T", field.label(r))).collect();
    let table = MultiOpTable::from_parts(size, 0, sums, Some(mul))?.with_labels(labels);

    let report = check_hyperring(&table)?;
    if !report.passes_hyperring() {
        return Err(HyperError::BrokenConstruction(
            "factor table failed the hyperring axioms".into(),
        ));
    }
    Ok(FactorTable { table, reps, class_of })
}

fn reps_sorted<F: FieldCarrier>(field: &F, reps: &[F::Elem]) -> bool {
    // skip the zero rep at index 0; unit-coset reps must ascend
    reps[1..].windows(2).all(|w| field.coeff_key(&w[0]) <= field.coeff_key(&w[1]))
}

/// Whether 1T ⊞ 1T = {0T, 1T} in A_T; equivalent (in odd characteristic)
/// to T ∪ {0} being closed under addition, i.e. to T being the
/// multiplicative group of a subfield. Both routes are computed and
/// compared as a self-test where the equivalence applies.
pub fn subfield_criterion<F: FieldCarrier>(field: &F, t: &[F::Elem]) -> Result<bool> {
    let t = validate_subgroup(field, t)?;
    // left route: the coset set {(t + s)T} compared with {0T, 1T}
    let mut saw_zero = false;
    let mut saw_one_coset = false;
    let mut saw_other = false;
    for a in &t {
        for b in &t {
            let z = field.add_elems(a, b);
            if field.elem_is_zero(&z) {
                saw_zero = true;
            } else if t.contains(&z) {
                saw_one_coset = true;
            } else {
                saw_other = true;
            }
        }
    }
    let criterion = saw_zero && saw_one_coset && !saw_other;

    // independent route: additive closure of T ∪ {0}
    let closed =
        t.iter().all(|a| t.iter().all(|b| {
            let z = field.add_elems(a, b);
            field.elem_is_zero(&z) || t.contains(&z)
        }));
    if field.characteristic() != 2 {
        debug_assert_eq!(criterion, closed, "the subfield lemma equivalence must hold away from characteristic 2");
    }
    Ok(criterion)
}

/// Direct additive-closure test of T ∪ {0}, the independent side of the
/// subfield criterion.
pub fn additively_closed_with_zero<F: FieldCarrier>(field: &F, t: &[F::Elem]) -> Result<bool> {
    let t = validate_subgroup(field, t)?;
    Ok(t.iter().all(|a| {
        t.iter().all(|b| {
            let z = field.add_elems(a, b);
            field.elem_is_zero(&z) || t.contains(&z)
        })
    }))
}

use crate::error::{HyperError, Result};
use crate::table::{IndexSet, MultiOpTable};

/// Outcome of one exhaustively checked axiom: total violation count plus
/// the minimal witness tuple (indices in scan order), so fuzzed tables get
/// complete diagnostics instead of a fail-fast bail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub violations: usize,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        Self { name, violations: 0, witness: None }
    }

    fn record(&mut self, witness: &[usize]) {
        if self.witness.is_none() {
            self.witness = Some(witness.to_vec());
        }
        self.violations += 1;
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Report of the canonical hypergroup suite. Reproductivity is derived
/// rather than axiomatic for canonical hypergroups, so it is reported as
/// its own line and excluded from `passes_canonical`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergroupReport {
    pub nonempty: AxiomCheck,
    pub ch1_associative: AxiomCheck,
    pub ch2_commutative: AxiomCheck,
    pub ch3_unique_negative: AxiomCheck,
    pub ch4_reversible: AxiomCheck,
    pub reproductive: AxiomCheck,
    /// negative_of[x] = the unique y with 0 in x ⊞ y, where defined.
    pub negatives: Vec<Option<usize>>,
}

impl HypergroupReport {
    pub fn passes_canonical(&self) -> bool {
        self.nonempty.passed()
            && self.ch1_associative.passed()
            && self.ch2_commutative.passed()
            && self.ch3_unique_negative.passed()
            && self.ch4_reversible.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.passes_canonical() && self.reproductive.passed()
    }

    pub fn checks(&self) -> Vec<&AxiomCheck> {
        vec![
            &self.nonempty,
            &self.ch1_associative,
            &self.ch2_commutative,
            &self.ch3_unique_negative,
            &self.ch4_reversible,
            &self.reproductive,
        ]
    }
}

/// Exhaustive canonical-hypergroup check: nonemptiness of every sum,
/// commutativity, associativity as set-extension equality
/// (x ⊞ y) ⊞ z = x ⊞ (y ⊞ z), unique negatives, reversibility
/// z ∈ x ⊞ y ⇒ y ∈ z ⊞ x⁻, and reproductivity x ⊞ H = H.
pub fn check_canonical_hypergroup(h: &MultiOpTable) -> HypergroupReport {
    let n = h.size();
    let zero = h.zero();
    let masks = h.sum_masks();
    let mask = |i: usize, j: usize| &masks[i * n + j];

    let mut nonempty = AxiomCheck::new("nonempty-sums");
    let mut ch2 = AxiomCheck::new("CH2-commutativity");
    for i in 0..n {
        for j in 0..n {
            if h.sum(i, j).is_empty() {
                nonempty.record(&[i, j]);
            }
            if i < j && h.sum(i, j) != h.sum(j, i) {
                ch2.record(&[i, j]);
            }
        }
    }

    let mut ch1 = AxiomCheck::new("CH1-associativity");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut left = IndexSet::empty(n);
                for w in h.sum(i, j) {
                    left.union_with(mask(*w, k));
                }
                let mut right = IndexSet::empty(n);
                for w in h.sum(j, k) {
                    right.union_with(mask(i, *w));
                }
                if left != right {
                    ch1.record(&[i, j, k]);
                }
            }
        }
    }

    let mut ch3 = AxiomCheck::new("CH3-unique-negative");
    let mut negatives: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let negs: Vec<usize> = (0..n).filter(|&j| h.sum_contains(i, j, zero)).collect();
        if negs.len() == 1 {
            negatives[i] = Some(negs[0]);
        } else {
            ch3.record(&[i]);
        }
    }

    let mut ch4 = AxiomCheck::new("CH4-reversibility");
    for i in 0..n {
        let Some(neg_i) = negatives[i] else { continue };
        for j in 0..n {
            for &k in h.sum(i, j) {
                if !h.sum_contains(k, neg_i, j) {
                    ch4.record(&[i, j, k]);
                }
            }
        }
    }

    let mut reproductive = AxiomCheck::new("reproductivity");
    for i in 0..n {
        let mut reach = IndexSet::empty(n);
        for j in 0..n {
            reach.union_with(mask(i, j));
        }
        if reach.count() != n {
            reproductive.record(&[i]);
        }
    }

    HypergroupReport {
        nonempty,
        ch1_associative: ch1,
        ch2_commutative: ch2,
        ch3_unique_negative: ch3,
        ch4_reversible: ch4,
        reproductive,
        negatives,
    }
}

/// Report of the hyperring suite on top of the canonical hypergroup one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperringReport {
    pub additive: HypergroupReport,
    pub hr2_mul_associative: AxiomCheck,
    pub hr2_mul_commutative: AxiomCheck,
    pub hr2_zero_absorbing: AxiomCheck,
    pub hr3_distributive: AxiomCheck,
    pub unity: AxiomCheck,
    pub hyperfield_units: AxiomCheck,
}

impl HyperringReport {
    /// HR1 + HR2 + HR3 with a unit; the hyperfield condition is reported
    /// separately via `is_hyperfield`.
    pub fn passes_hyperring(&self) -> bool {
        self.additive.passes_canonical()
            && self.hr2_mul_associative.passed()
            && self.hr2_mul_commutative.passed()
            && self.hr2_zero_absorbing.passed()
            && self.hr3_distributive.passed()
            && self.unity.passed()
    }

    /// Hyperring whose nonzero elements form an abelian group.
    pub fn is_hyperfield(&self) -> bool {
        self.passes_hyperring() && self.hyperfield_units.passed()
    }

    pub fn checks(&self) -> Vec<&AxiomCheck> {
        let mut out = self.additive.checks();
        out.extend([
            &self.hr2_mul_associative,
            &self.hr2_mul_commutative,
            &self.hr2_zero_absorbing,
            &self.hr3_distributive,
            &self.unity,
            &self.hyperfield_units,
        ]);
        out
    }
}

/// Exhaustive hyperring check HR1-HR3 plus unit axioms, with the hyperfield
/// condition (nonzero elements form a group) evaluated alongside.
/// Distributivity is checked as set equality x(y ⊞ z) = xy ⊞ xz.
pub fn check_hyperring(h: &MultiOpTable) -> Result<HyperringReport> {
    if !h.has_mul() {
        return Err(HyperError::MissingMultiplication);
    }
    let n = h.size();
    let zero = h.zero();
    let additive = check_canonical_hypergroup(h);
    let mul = |i: usize, j: usize| h.mul_of(i, j).unwrap();

    let mut assoc = AxiomCheck::new("HR2-mul-associative");
    let mut comm = AxiomCheck::new("HR2-mul-commutative");
    let mut absorb = AxiomCheck::new("HR2-zero-absorbing");
    for i in 0..n {
        if mul(zero, i) != zero || mul(i, zero) != zero {
            absorb.record(&[i]);
        }
        for j in 0..n {
            if i < j && mul(i, j) != mul(j, i) {
                comm.record(&[i, j]);
            }
            for k in 0..n {
                if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                    assoc.record(&[i, j, k]);
                }
            }
        }
    }

    let mut distrib = AxiomCheck::new("HR3-distributive");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut lhs: Vec<usize> = h.sum(y, z).iter().map(|&w| mul(x, w)).collect();
                lhs.sort_unstable();
                lhs.dedup();
                let rhs = h.sum(mul(x, y), mul(x, z));
                if lhs != rhs {
                    distrib.record(&[x, y, z]);
                }
            }
        }
    }

    let mut unity = AxiomCheck::new("unity");
    let one = h.one();
    match one {
        Some(e) if e != zero => {}
        _ => unity.record(&[]),
    }

    let mut units = AxiomCheck::new("hyperfield-units");
    if let Some(e) = one {
        for i in 0..n {
            if i == zero {
                continue;
            }
            for j in 0..n {
                if j != zero && mul(i, j) == zero {
                    units.record(&[i, j]);
                }
            }
            if !(0..n).any(|j| mul(i, j) == e) {
                units.record(&[i]);
            }
        }
    } else {
        units.record(&[]);
    }

    Ok(HyperringReport {
        additive,
        hr2_mul_associative: assoc,
        hr2_mul_commutative: comm,
        hr2_zero_absorbing: absorb,
        hr3_distributive: distrib,
        unity,
        hyperfield_units: units,
    })
}

//! K-vector spaces: canonical hypergroups satisfying x ⊞ x = {0, x}, with
//! the induced notions of linear independence, spanning, bases and
//! dimension. Subset checks are exponential, so carriers are capped at
//! desk scale.

use hyperlab_hyper::{IndexSet, MultiOpTable};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest carrier accepted; adequate for every desk-scale space while
/// keeping the exponential subset checks bounded.
pub const MAX_CARRIER: usize = 50;

/// Shuffled greedy orders used to cross-validate a dimension computation.
pub const DIMENSION_SHUFFLES: usize = 8;

const DEFAULT_SEED: u64 = 0x6b76_6563;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KVectorError {
    #[error("not a K-vector space: x ⊞ x != {{0, x}} at index {0}")]
    NotAKVectorSpace(usize),
    #[error("carrier size {0} exceeds the subset-check cap {1}")]
    CarrierTooLarge(usize, usize),
    #[error("greedy search saturated at {basis:?} but index {missing} is not spanned; the table does not arise from a field extension")]
    SpanningFailed { basis: Vec<usize>, missing: usize },
    #[error("shuffled greedy orders disagree on basis cardinality: {0} vs {1}")]
    DimensionDisagreement(usize, usize),
}

pub type Result<T> = std::result::Result<T, KVectorError>;

/// Why a set failed the independence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndependenceFailure {
    /// The zero element is in the set.
    ContainsZero,
    /// Zero lies in the iterated sum of this subset.
    ZeroSum(Vec<usize>),
}

/// A table verified to satisfy the K-vector space identity at wrap time.
#[derive(Debug, Clone)]
pub struct KVectorSpace {
    table: MultiOpTable,
}

impl KVectorSpace {
    pub fn wrap(table: MultiOpTable) -> Result<Self> {
        if table.size() > MAX_CARRIER {
            return Err(KVectorError::CarrierTooLarge(table.size(), MAX_CARRIER));
        }
        let zero = table.zero();
        for x in 0..table.size() {
            let expected: Vec<usize> = if x == zero {
                vec![zero]
            } else {
                let mut v = vec![zero, x];
                v.sort_unstable();
                v
            };
            if table.sum(x, x) != expected {
                return Err(KVectorError::NotAKVectorSpace(x));
            }
        }
        Ok(Self { table })
    }

    pub fn table(&self) -> &MultiOpTable {
        &self.table
    }

    fn carrier(&self) -> usize {
        self.table.size()
    }

    /// Set ⊞ element, as a bit set.
    fn extend_sum(&self, acc: &IndexSet, e: usize) -> IndexSet {
        let mut out = IndexSet::empty(self.carrier());
        for w in acc.iter() {
            out.union_with(&IndexSet::from_sorted(self.carrier(), self.table.sum(w, e)));
        }
        out
    }

    /// Independence per the defining condition: zero is absent from the
    /// iterated sum of every nonempty subset of pairwise distinct
    /// elements. Left-associated evaluation with memoized partial sums;
    /// bracketing is irrelevant under associativity. A set containing
    /// zero is dependent outright.
    pub fn independence_failure(
        &self,
        set: impl IntoIterator<Item = usize>,
    ) -> Option<IndependenceFailure> {
        let zero = self.table.zero();
        let els: BTreeSet<usize> = set.into_iter().collect();
        if els.contains(&zero) {
            return Some(IndependenceFailure::ContainsZero);
        }
        let els: Vec<usize> = els.into_iter().collect();
        let m = els.len();
        let mut partial: Vec<Option<IndexSet>> = vec![None; 1usize << m];
        for mask in 1usize..(1usize << m) {
            let hi = (usize::BITS - 1 - mask.leading_zeros()) as usize;
            let rest = mask & !(1 << hi);
            let sum = if rest == 0 {
                IndexSet::from_sorted(self.carrier(), &[els[hi]])
            } else {
                self.extend_sum(partial[rest].as_ref().unwrap(), els[hi])
            };
            if sum.contains(zero) {
                let subset: Vec<usize> =
                    (0..m).filter(|i| mask & (1 << i) != 0).map(|i| els[i]).collect();
                return Some(IndependenceFailure::ZeroSum(subset));
            }
            partial[mask] = Some(sum);
        }
        None
    }

    pub fn is_independent(&self, set: impl IntoIterator<Item = usize>) -> bool {
        self.independence_failure(set).is_none()
    }

    /// Whether every carrier element outside the set lies in some iterated
    /// sum of set elements (repetitions allowed).
    pub fn spans(&self, set: &[usize]) -> bool {
        (0..self.carrier()).all(|x| set.contains(&x) || self.spans_element(set, x))
    }

    fn spans_element(&self, set: &[usize], x: usize) -> bool {
        if set.is_empty() {
            return false;
        }
        let n = self.carrier();
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let base = IndexSet::from_sorted(n, &sorted);
        let mut reached = base.clone();
        let mut level = base;
        let mut seen: Vec<IndexSet> = vec![level.clone()];
        loop {
            let mut next = IndexSet::empty(n);
            for w in level.iter() {
                for &s in set {
                    next.union_with(&IndexSet::from_sorted(n, self.table.sum(w, s)));
                }
            }
            reached.union_with(&next);
            if seen.contains(&next) {
                break;
            }
            seen.push(next.clone());
            level = next;
        }
        reached.contains(x)
    }

    /// Greedy basis in the canonical element order: an element joins when
    /// independence survives; spanning is verified afterwards.
    pub fn find_basis(&self) -> Result<Vec<usize>> {
        let order: Vec<usize> = (0..self.carrier()).collect();
        self.find_basis_with_order(&order)
    }

    /// Greedy basis over a caller-chosen element order.
    pub fn find_basis_with_order(&self, order: &[usize]) -> Result<Vec<usize>> {
        let zero = self.table.zero();
        let mut basis: Vec<usize> = Vec::new();
        for &e in order {
            if e == zero || basis.contains(&e) {
                continue;
            }
            let mut candidate = basis.clone();
            candidate.push(e);
            if self.is_independent(candidate.iter().copied()) {
                basis.push(e);
            }
        }
        if let Some(missing) =
            (0..self.carrier()).find(|&x| !basis.contains(&x) && !self.spans_element(&basis, x))
        {
            return Err(KVectorError::SpanningFailed { basis, missing });
        }
        basis.sort_unstable();
        Ok(basis)
    }

    /// Basis cardinality, cross-validated by re-running the greedy search
    /// over several seeded shuffles of the element order.
    pub fn dimension_with_seed(&self, seed: u64, shuffles: usize) -> Result<usize> {
        let canonical = self.find_basis()?.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..self.carrier()).collect();
        for _ in 0..shuffles {
            order.shuffle(&mut rng);
            let other = self.find_basis_with_order(&order)?.len();
            if other != canonical {
                return Err(KVectorError::DimensionDisagreement(canonical, other));
            }
        }
        Ok(canonical)
    }

    pub fn dimension(&self) -> Result<usize> {
        self.dimension_with_seed(DEFAULT_SEED, DIMENSION_SHUFFLES)
    }
}

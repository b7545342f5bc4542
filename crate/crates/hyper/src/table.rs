use crate::error::{HyperError, Result};
use std::fmt;

/// Growable bit set over a fixed universe 0..len; the workhorse of the
/// exhaustive axiom checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    len: usize,
    blocks: Vec<u64>,
}

impl IndexSet {
    pub fn empty(len: usize) -> Self {
        Self { len, blocks: vec![0; len.div_ceil(64)] }
    }

    pub fn from_sorted(len: usize, items: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &i in items {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.blocks[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &b)| {
            (0..64).filter(move |k| b & (1 << k) != 0).map(move |k| bi * 64 + k)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Finite carrier with an explicitly enumerated multivalued addition, an
/// optional single-valued multiplication, and a designated zero. This is
/// the common home of every hypergroup, hyperring and hyperfield in the
/// workbench; axiom checkers consume it, constructions produce it.
///
/// Sum sets are stored fully enumerated and sorted, so set equality is a
/// plain vector comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiOpTable {
    size: usize,
    zero: usize,
    sums: Vec<Vec<usize>>,
    mul: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl MultiOpTable {
    pub fn from_parts(
        size: usize,
        zero: usize,
        mut sums: Vec<Vec<usize>>,
        mul: Option<Vec<usize>>,
    ) -> Result<Self> {
        if size == 0 || zero >= size {
            return Err(HyperError::IndexOutOfRange(zero, size));
        }
        if sums.len() != size * size {
            return Err(HyperError::ParseError(format!(
                "expected {} sum sets, got {}",
                size * size,
                sums.len()
            )));
        }
        for set in sums.iter_mut() {
            set.sort_unstable();
            set.dedup();
            if let Some(&m) = set.last() {
                if m >= size {
                    return Err(HyperError::IndexOutOfRange(m, size));
                }
            }
        }
        if let Some(m) = &mul {
            if m.len() != size * size {
                return Err(HyperError::ParseError("multiplication table size mismatch".into()));
            }
            if let Some(&bad) = m.iter().find(|&&k| k >= size) {
                return Err(HyperError::IndexOutOfRange(bad, size));
            }
        }
        Ok(Self { size, zero, sums, mul, labels: None })
    }

    /// Build from closures over index pairs.
    pub fn build(
        size: usize,
        zero: usize,
        sum: impl Fn(usize, usize) -> Vec<usize>,
        mul: Option<&dyn Fn(usize, usize) -> usize>,
    ) -> Result<Self> {
        let mut sums = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                sums.push(sum(i, j));
            }
        }
        let mul_table = mul.map(|f| {
            let mut m = Vec::with_capacity(size * size);
            for i in 0..size {
                for j in 0..size {
                    m.push(f(i, j));
                }
            }
            m
        });
        Self::from_parts(size, zero, sums, mul_table)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.size);
        self.labels = Some(labels);
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn sum(&self, i: usize, j: usize) -> &[usize] {
        &self.sums[i * self.size + j]
    }

    /// Membership test z ∈ x ⊞ y.
    pub fn sum_contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.sum(x, y).binary_search(&z).is_ok()
    }

    pub fn mul_of(&self, i: usize, j: usize) -> Option<usize> {
        self.mul.as_ref().map(|m| m[i * self.size + j])
    }

    /// The multiplicative unit, reconstructed from the table: the unique
    /// element e with e*x = x for all x, if one exists.
    pub fn one(&self) -> Option<usize> {
        let m = self.mul.as_ref()?;
        (0..self.size).find(|&e| (0..self.size).all(|x| m[e * self.size + x] == x))
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// Replace one sum set; intended for constructing counterexample tables
    /// in tests and fuzzing.
    pub fn set_sum(&mut self, i: usize, j: usize, mut set: Vec<usize>) {
        set.sort_unstable();
        set.dedup();
        self.sums[i * self.size + j] = set;
    }

    pub fn set_mul(&mut self, i: usize, j: usize, k: usize) {
        if let Some(m) = self.mul.as_mut() {
            m[i * self.size + j] = k;
        }
    }

    /// Drop the multiplicative structure, keeping the additive reduct.
    pub fn additive_reduct(&self) -> Self {
        Self {
            size: self.size,
            zero: self.zero,
            sums: self.sums.clone(),
            mul: None,
            labels: self.labels.clone(),
        }
    }

    /// Sum sets as bit masks, indexed row-major.
    pub fn sum_masks(&self) -> Vec<IndexSet> {
        self.sums.iter().map(|s| IndexSet::from_sorted(self.size, s)).collect()
    }

    /// Line-oriented text serialization, bit-exact for golden tests:
    /// `carrier n`, `zero i`, one `sum i j : k1 k2 ...` line per pair in
    /// row-major order, then `mul i j : k` lines when multiplication is
    /// present.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("carrier {}\n", self.size));
        out.push_str(&format!("zero {}\n", self.zero));
        for i in 0..self.size {
            for j in 0..self.size {
                out.push_str(&format!("sum {i} {j} :"));
                for k in self.sum(i, j) {
                    out.push_str(&format!(" {k}"));
                }
                out.push('\n');
            }
        }
        if let Some(m) = &self.mul {
            for i in 0..self.size {
                for j in 0..self.size {
                    out.push_str(&format!("mul {i} {j} : {}\n", m[i * self.size + j]));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut size = None;
        let mut zero = None;
        let mut sums: Vec<Vec<usize>> = Vec::new();
        let mut mul: Vec<(usize, usize, usize)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || HyperError::ParseError(format!("line {}: {line}", lineno + 1));
            let mut words = line.split_whitespace();
            match words.next() {
                Some("carrier") => {
                    size = Some(words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?)
                }
                Some("zero") => {
                    zero = Some(words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?)
                }
                Some("sum") => {
                    let i: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    let j: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    if words.next() != Some(":") {
                        return Err(bad());
                    }
                    let n = size.ok_or_else(bad)?;
                    if sums.len() != i * n + j {
                        return Err(HyperError::ParseError(format!(
                            "sum lines out of order at line {}",
                            lineno + 1
                        )));
                    }
                    let set: std::result::Result<Vec<usize>, _> =
                        words.map(str::parse).collect();
                    sums.push(set.map_err(|_| bad())?);
                }
                Some("mul") => {
                    let i: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    let j: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    if words.next() != Some(":") {
                        return Err(bad());
                    }
                    let k: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    mul.push((i, j, k));
                }
                _ => return Err(bad()),
            }
        }
        let size = size.ok_or_else(|| HyperError::ParseError("missing carrier line".into()))?;
        let zero = zero.ok_or_else(|| HyperError::ParseError("missing zero line".into()))?;
        let mul_table = if mul.is_empty() {
            None
        } else {
            let mut m = vec![0usize; size * size];
            if mul.len() != size * size {
                return Err(HyperError::ParseError("incomplete mul table".into()));
            }
            for (i, j, k) in mul {
                m[i * size + j] = k;
            }
            Some(m)
        };
        Self::from_parts(size, zero, sums, mul_table)
    }
}

impl fmt::Display for MultiOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

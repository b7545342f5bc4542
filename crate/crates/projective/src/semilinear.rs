use crate::error::{ProjectiveError, Result};
use crate::space::{ProjPoint, ProjSpace, SpaceIndex};
use hyperlab_algebra::{FieldElement, FrobeniusAuto};
use std::sync::Arc;

/// An invertible matrix together with a Frobenius power: the semilinear
/// map v -> M * θ(v), which descends to a collineation of the projective
/// space. Composition follows (M, k)(M', k') = (M * θ^k(M'), k + k').
#[derive(Debug, Clone)]
pub struct SemilinearMap {
    space: Arc<ProjSpace>,
    matrix: Vec<Vec<FieldElement>>,
    aut: FrobeniusAuto,
}

impl SemilinearMap {
    pub fn new(space: Arc<ProjSpace>, matrix: Vec<Vec<FieldElement>>, frob_power: usize) -> Result<Self> {
        let w = space.dim() + 1;
        if matrix.len() != w || matrix.iter().any(|r| r.len() != w) {
            return Err(ProjectiveError::BadPoint);
        }
        for row in &matrix {
            for c in row {
                if c.spec() != space.field() && !Arc::ptr_eq(c.spec(), space.field()) {
                    return Err(ProjectiveError::IncompatibleSpaces);
                }
            }
        }
        if !invertible(&matrix)? {
            return Err(ProjectiveError::Algebra(hyperlab_algebra::AlgebraError::Invalid(
                "matrix is singular".into(),
            )));
        }
        let aut = FrobeniusAuto::new(Arc::clone(space.field()), frob_power);
        Ok(Self { space, matrix, aut })
    }

    pub fn identity(space: Arc<ProjSpace>) -> Self {
        let w = space.dim() + 1;
        let field = Arc::clone(space.field());
        let mut matrix = vec![vec![field.zero(); w]; w];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = field.one();
        }
        let aut = FrobeniusAuto::identity(field);
        Self { space, matrix, aut }
    }

    pub fn space(&self) -> &Arc<ProjSpace> {
        &self.space
    }

    pub fn frobenius_power(&self) -> usize {
        self.aut.power()
    }

    /// α_f([v]) = [M θ(v)], canonicalized.
    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if p.space() != self.space.as_ref() {
            return Err(ProjectiveError::IncompatibleSpaces);
        }
        let twisted: hyperlab_algebra::Result<Vec<FieldElement>> =
            p.coords().iter().map(|c| self.aut.apply(c)).collect();
        let twisted = twisted?;
        let mut out = Vec::with_capacity(twisted.len());
        for row in &self.matrix {
            let mut acc = self.space.field().zero();
            for (m, v) in row.iter().zip(&twisted) {
                acc = acc.checked_add(&m.checked_mul(v)?)?;
            }
            out.push(acc);
        }
        self.space.point(&out)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(ProjectiveError::IncompatibleSpaces);
        }
        let w = self.space.dim() + 1;
        // θ^k applied entrywise to the right factor's matrix
        let mut twisted = vec![vec![self.space.field().zero(); w]; w];
        for i in 0..w {
            for j in 0..w {
                twisted[i][j] = self.aut.apply(&other.matrix[i][j])?;
            }
        }
        let mut prod = vec![vec![self.space.field().zero(); w]; w];
        for i in 0..w {
            for j in 0..w {
                let mut acc = self.space.field().zero();
                for (k, t) in twisted.iter().enumerate() {
                    acc = acc.checked_add(&self.matrix[i][k].checked_mul(&t[j])?)?;
                }
                prod[i][j] = acc;
            }
        }
        let aut = self.aut.compose(&other.aut);
        Ok(Self { space: Arc::clone(&self.space), matrix: prod, aut })
    }

    /// The induced point permutation over a space index.
    pub fn induced_permutation(&self, idx: &SpaceIndex) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(idx.n_points());
        for p in &idx.points {
            let image = self.apply(p)?;
            out.push(idx.points.binary_search(&image).expect("image is a point"));
        }
        Ok(out)
    }

    /// Incidence preservation, checked exhaustively: x on l(a, b) iff
    /// α(x) on l(α(a), α(b)). Every semilinear map must pass.
    pub fn preserves_incidence(&self, idx: &SpaceIndex) -> Result<bool> {
        let perm = self.induced_permutation(idx)?;
        let n = idx.n_points();
        for a in 0..n {
            for b in a + 1..n {
                for x in 0..n {
                    if idx.collinear(a, b, x) != idx.collinear(perm[a], perm[b], perm[x]) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn invertible(matrix: &[Vec<FieldElement>]) -> Result<bool> {
    let n = matrix.len();
    let mut m: Vec<Vec<FieldElement>> = matrix.to_vec();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(false);
        };
        m.swap(pivot, col);
        let inv = m[col][col].inverse()?;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].checked_mul(&inv)?;
            for k in col..n {
                let sub = m[col][k].checked_mul(&factor)?;
                m[r][k] = m[r][k].checked_sub(&sub)?;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperlab_algebra::FiniteFieldSpec;

    fn p1_f9() -> Arc<ProjSpace> {
        ProjSpace::new(FiniteFieldSpec::gf(9).unwrap(), 1).unwrap()
    }

    #[test]
    fn identity_fixes_every_point() {
        let space = p1_f9();
        let id = SemilinearMap::identity(Arc::clone(&space));
        for p in space.points() {
            assert_eq!(id.apply(&p).unwrap(), p);
        }
    }

    #[test]
    fn scalar_matrix_acts_trivially() {
        let space = p1_f9();
        let f9 = Arc::clone(space.field());
        let two = f9.from_int(2);
        let matrix = vec![vec![two.clone(), f9.zero()], vec![f9.zero(), two]];
        let m = SemilinearMap::new(Arc::clone(&space), matrix, 0).unwrap();
        for p in space.points() {
            assert_eq!(m.apply(&p).unwrap(), p);
        }
    }

    #[test]
    fn frobenius_on_p1_f9_fixes_exactly_the_f3_subline() {
        let space = p1_f9();
        let f9 = Arc::clone(space.field());
        let frob = SemilinearMap::new(
            Arc::clone(&space),
            SemilinearMap::identity(Arc::clone(&space)).matrix,
            1,
        )
        .unwrap();
        let fixed: Vec<ProjPoint> = space
            .points()
            .into_iter()
            .filter(|p| frob.apply(p).unwrap() == *p)
            .collect();
        // the sub-line P^1(F_3): coordinates from the prime subfield
        let expected: Vec<ProjPoint> = [[0u64, 1], [1, 0], [1, 1], [1, 2]]
            .iter()
            .map(|c| space.point(&[f9.from_int(c[0]), f9.from_int(c[1])]).unwrap())
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(fixed, expected);
        assert_eq!(space.points().len(), 10);
    }

    #[test]
    fn singular_matrix_rejected_at_construction() {
        let space = p1_f9();
        let f9 = Arc::clone(space.field());
        let matrix = vec![vec![f9.one(), f9.one()], vec![f9.one(), f9.one()]];
        assert!(SemilinearMap::new(space, matrix, 0).is_err());
    }

    #[test]
    fn composition_matches_permutation_composition() {
        let space = p1_f9();
        let f9 = Arc::clone(space.field());
        let idx = SpaceIndex::build(&space).unwrap();
        let a = SemilinearMap::new(
            Arc::clone(&space),
            vec![vec![f9.one(), f9.element(&[0, 1]).unwrap()], vec![f9.zero(), f9.one()]],
            1,
        )
        .unwrap();
        let b = SemilinearMap::new(
            Arc::clone(&space),
            vec![vec![f9.zero(), f9.one()], vec![f9.from_int(2), f9.one()]],
            0,
        )
        .unwrap();
        let ab = a.compose(&b).unwrap();
        let pa = a.induced_permutation(&idx).unwrap();
        let pb = b.induced_permutation(&idx).unwrap();
        let pab = ab.induced_permutation(&idx).unwrap();
        let composed: Vec<usize> = (0..idx.n_points()).map(|i| pa[pb[i]]).collect();
        assert_eq!(pab, composed);
        assert_eq!(ab.frobenius_power(), 1);
    }

    /// Deterministic matrix sampler: xorshift-driven entries, keeping the
    /// invertible ones.
    fn sample_maps(space: &Arc<ProjSpace>, count: usize, frob: usize) -> Vec<SemilinearMap> {
        let field = Arc::clone(space.field());
        let q = field.order();
        let w = space.dim() + 1;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let els = field.elements();
        let mut out = Vec::new();
        while out.len() < count {
            let matrix: Vec<Vec<FieldElement>> = (0..w)
                .map(|_| (0..w).map(|_| els[(next() % q) as usize].clone()).collect())
                .collect();
            if let Ok(m) = SemilinearMap::new(Arc::clone(space), matrix, frob) {
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn sampled_semilinear_maps_preserve_incidence_exhaustively() {
        // every semilinear map must pass the incidence test on all triples
        let p2 = ProjSpace::new(FiniteFieldSpec::prime(3).unwrap(), 2).unwrap();
        let idx2 = SpaceIndex::build(&p2).unwrap();
        for m in sample_maps(&p2, 12, 0) {
            assert!(m.preserves_incidence(&idx2).unwrap());
        }
        let p1_f9 = p1_f9();
        let idx9 = SpaceIndex::build(&p1_f9).unwrap();
        for frob in [0usize, 1] {
            for m in sample_maps(&p1_f9, 6, frob) {
                assert!(m.preserves_incidence(&idx9).unwrap());
            }
        }
    }

    #[test]
    fn sampled_compositions_match_permutation_composition() {
        let space = ProjSpace::new(FiniteFieldSpec::gf(4).unwrap(), 1).unwrap();
        let idx = SpaceIndex::build(&space).unwrap();
        let maps = [sample_maps(&space, 4, 0), sample_maps(&space, 4, 1)].concat();
        for a in &maps {
            for b in &maps {
                let ab = a.compose(b).unwrap();
                let pa = a.induced_permutation(&idx).unwrap();
                let pb = b.induced_permutation(&idx).unwrap();
                let composed: Vec<usize> = (0..idx.n_points()).map(|i| pa[pb[i]]).collect();
                assert_eq!(ab.induced_permutation(&idx).unwrap(), composed);
            }
        }
    }

    #[test]
    fn semilinear_maps_preserve_incidence_on_p2_f4() {
        let space = ProjSpace::new(FiniteFieldSpec::gf(4).unwrap(), 2).unwrap();
        let f4 = Arc::clone(space.field());
        let idx = SpaceIndex::build(&space).unwrap();
        let m = SemilinearMap::new(
            Arc::clone(&space),
            vec![
                vec![f4.one(), f4.element(&[0, 1]).unwrap(), f4.zero()],
                vec![f4.zero(), f4.one(), f4.one()],
                vec![f4.one(), f4.zero(), f4.one()],
            ],
            1,
        )
        .unwrap();
        assert!(m.preserves_incidence(&idx).unwrap());
    }
}

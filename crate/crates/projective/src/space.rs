use crate::error::{ProjectiveError, Result};
use hyperlab_algebra::{FieldElement, FiniteFieldSpec};
use std::fmt;
use std::sync::Arc;

/// The projective space P^n over F_q: equivalence classes of nonzero
/// coordinate vectors of length n+1 under scalar multiplication.
#[derive(Debug, PartialEq, Eq)]
pub struct ProjSpace {
    field: Arc<FiniteFieldSpec>,
    dim: usize,
}

impl ProjSpace {
    /// Plain point/line enumeration permits any q (including 2); the
    /// hypergroup-facing operations reject q = 2 themselves.
    pub fn new(field: Arc<FiniteFieldSpec>, dim: usize) -> Result<Arc<Self>> {
        if dim == 0 {
            return Err(ProjectiveError::DimensionError(1));
        }
        Ok(Arc::new(Self { field, dim }))
    }

    pub fn field(&self) -> &Arc<FiniteFieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// (q^(n+1) - 1)/(q - 1).
    pub fn point_count(&self) -> usize {
        let q = self.field.order() as usize;
        (q.pow(self.dim as u32 + 1) - 1) / (q - 1)
    }

    /// Canonicalized point: scaled so the first nonzero coordinate is 1.
    pub fn point(self: &Arc<Self>, coords: &[FieldElement]) -> Result<ProjPoint> {
        if coords.len() != self.dim + 1 {
            return Err(ProjectiveError::BadPoint);
        }
        for c in coords {
            if c.spec() != &self.field && !Arc::ptr_eq(c.spec(), &self.field) {
                return Err(ProjectiveError::IncompatibleSpaces);
            }
        }
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(ProjectiveError::BadPoint)?;
        let inv = lead.inverse()?;
        let canon: hyperlab_algebra::Result<Vec<FieldElement>> =
            coords.iter().map(|c| c.checked_mul(&inv)).collect();
        Ok(ProjPoint { space: Arc::clone(self), coords: canon? })
    }

    pub fn point_from_ints(self: &Arc<Self>, coords: &[u64]) -> Result<ProjPoint> {
        let els: Vec<FieldElement> = coords.iter().map(|&c| self.field.from_int(c)).collect();
        self.point(&els)
    }

    /// All points in canonical coordinate order.
    pub fn points(self: &Arc<Self>) -> Vec<ProjPoint> {
        let els = self.field.elements();
        let width = self.dim + 1;
        let mut out: Vec<ProjPoint> = Vec::with_capacity(self.point_count());
        // canonical form: some prefix of zeros, then 1, then free coordinates
        for lead in 0..width {
            let free = width - lead - 1;
            let mut digits = vec![0usize; free];
            loop {
                let mut coords = vec![self.field.zero(); lead];
                coords.push(self.field.one());
                coords.extend(digits.iter().map(|&i| els[i].clone()));
                out.push(ProjPoint { space: Arc::clone(self), coords });
                let mut i = free;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < els.len() {
                        break;
                    }
                    digits[i] = 0;
                }
                if digits.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
        out.sort();
        debug_assert_eq!(out.len(), self.point_count());
        out
    }

    /// The line through two distinct points: every [a x + b y] with a, b
    /// nonzero, together with the two defining points; exactly q+1 points.
    pub fn line_of(self: &Arc<Self>, x: &ProjPoint, y: &ProjPoint) -> Result<Line> {
        if *x.space() != **self || *y.space() != **self {
            return Err(ProjectiveError::IncompatibleSpaces);
        }
        if x == y {
            return Err(ProjectiveError::DegenerateLine);
        }
        let mut pts = vec![x.clone(), y.clone()];
        let units: Vec<FieldElement> =
            self.field.elements().into_iter().filter(|e| !e.is_zero()).collect();
        for a in &units {
            for b in &units {
                let coords: hyperlab_algebra::Result<Vec<FieldElement>> = x
                    .coords
                    .iter()
                    .zip(&y.coords)
                    .map(|(xc, yc)| xc.checked_mul(a)?.checked_add(&yc.checked_mul(b)?))
                    .collect();
                pts.push(self.point(&coords?)?);
            }
        }
        pts.sort();
        pts.dedup();
        debug_assert_eq!(pts.len(), self.field.order() as usize + 1);
        Ok(Line { points: pts, defined_by: (x.clone(), y.clone()) })
    }
}

/// A point of P^n in canonical homogeneous coordinates (first nonzero
/// coordinate equal to 1); equality and ordering are coordinate-wise.
#[derive(Debug, Clone)]
pub struct ProjPoint {
    space: Arc<ProjSpace>,
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn space(&self) -> &ProjSpace {
        &self.space
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for ProjPoint {}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl std::hash::Hash for ProjPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A line as its sorted point set, remembering the two points it was
/// built from. Lines are equal when their point sets are.
#[derive(Debug, Clone)]
pub struct Line {
    points: Vec<ProjPoint>,
    defined_by: (ProjPoint, ProjPoint),
}

impl Line {
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn defined_by(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.defined_by.0, &self.defined_by.1)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for Line {}

impl PartialOrd for Line {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Line {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.points.cmp(&other.points)
    }
}

/// Indexed view of a space: points numbered in canonical order, lines
/// deduplicated, and constant-time incidence lookups. Every exhaustive
/// search in this crate runs on one of these.
#[derive(Debug)]
pub struct SpaceIndex {
    pub space: Arc<ProjSpace>,
    pub points: Vec<ProjPoint>,
    /// Sorted point-index sets, one per distinct line.
    pub lines: Vec<Vec<usize>>,
    /// line_of_pair[a * n + b] = id of the unique line through a != b.
    line_of_pair: Vec<usize>,
    /// lines_through[p] = ids of lines incident with p.
    pub lines_through: Vec<Vec<usize>>,
    /// on_line[l * n + p] = true when point p lies on line l.
    on_line: Vec<bool>,
}

impl SpaceIndex {
    pub fn build(space: &Arc<ProjSpace>) -> Result<Self> {
        let points = space.points();
        let n = points.len();
        let mut lines: Vec<Vec<usize>> = Vec::new();
        let mut line_of_pair = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in a + 1..n {
                if line_of_pair[a * n + b] != usize::MAX {
                    continue;
                }
                let line = space.line_of(&points[a], &points[b])?;
                let ids: Vec<usize> = line
                    .points()
                    .iter()
                    .map(|p| points.binary_search(p).expect("line point enumerated"))
                    .collect();
                let lid = lines.len();
                for (i, &p) in ids.iter().enumerate() {
                    for &q in &ids[i + 1..] {
                        line_of_pair[p * n + q] = lid;
                        line_of_pair[q * n + p] = lid;
                    }
                }
                lines.push(ids);
            }
        }
        let mut lines_through = vec![Vec::new(); n];
        let mut on_line = vec![false; lines.len() * n];
        for (lid, ids) in lines.iter().enumerate() {
            for &p in ids {
                lines_through[p].push(lid);
                on_line[lid * n + p] = true;
            }
        }
        Ok(Self { space: Arc::clone(space), points, lines, line_of_pair, lines_through, on_line })
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn line_id(&self, a: usize, b: usize) -> Option<usize> {
        let id = self.line_of_pair[a * self.points.len() + b];
        (id != usize::MAX).then_some(id)
    }

    pub fn point_on_line(&self, line: usize, p: usize) -> bool {
        self.on_line[line * self.points.len() + p]
    }

    /// Whether c lies on the line through distinct a, b.
    pub fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        match self.line_id(a, b) {
            Some(l) => self.point_on_line(l, c),
            None => true, // a == b: degenerate triple
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2_f3() -> Arc<ProjSpace> {
        ProjSpace::new(FiniteFieldSpec::prime(3).unwrap(), 2).unwrap()
    }

    #[test]
    fn point_counts() {
        // (q^(n+1)-1)/(q-1) for q in {3,4,5}, n in {1,2}
        for (q, n, expect) in
            [(3u64, 1usize, 4usize), (3, 2, 13), (4, 1, 5), (4, 2, 21), (5, 1, 6), (5, 2, 31)]
        {
            let space = ProjSpace::new(FiniteFieldSpec::gf(q).unwrap(), n).unwrap();
            assert_eq!(space.point_count(), expect);
            assert_eq!(space.points().len(), expect);
        }
    }

    #[test]
    fn canonicalization_merges_scalar_multiples() {
        let space = p2_f3();
        let a = space.point_from_ints(&[2, 1, 0]).unwrap();
        let b = space.point_from_ints(&[1, 2, 0]).unwrap();
        assert_eq!(a, b); // 2*(2,1,0) = (1,2,0)
        assert!(space.point_from_ints(&[0, 0, 0]).is_err());
    }

    #[test]
    fn line_example_over_f3() {
        // l((1,0,0),(0,1,0)) = {(1,0,0),(0,1,0),(1,1,0),(1,2,0)}
        let space = p2_f3();
        let x = space.point_from_ints(&[1, 0, 0]).unwrap();
        let y = space.point_from_ints(&[0, 1, 0]).unwrap();
        let line = space.line_of(&x, &y).unwrap();
        let expect: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0]]
            .iter()
            .map(|c| space.point_from_ints(c).unwrap())
            .collect();
        let mut expect_sorted = expect;
        expect_sorted.sort();
        assert_eq!(line.points(), expect_sorted.as_slice());
        assert_eq!(line.len(), 4); // q + 1 with q = 3: the P3 bound is tight
    }

    #[test]
    fn lines_are_symmetric_and_degenerate_rejected() {
        let space = p2_f3();
        let x = space.point_from_ints(&[1, 1, 2]).unwrap();
        let y = space.point_from_ints(&[0, 1, 1]).unwrap();
        assert_eq!(space.line_of(&x, &y).unwrap(), space.line_of(&y, &x).unwrap());
        assert_eq!(space.line_of(&x, &x).unwrap_err(), ProjectiveError::DegenerateLine);
    }

    #[test]
    fn index_has_13_lines_for_p2_f3() {
        let idx = SpaceIndex::build(&p2_f3()).unwrap();
        assert_eq!(idx.lines.len(), 13);
        for p in 0..13 {
            assert_eq!(idx.lines_through[p].len(), 4); // (q^2-1)/(q-1)
        }
    }

    #[test]
    fn line_count_through_point_formula() {
        for (q, n, expect) in [(3u64, 1usize, 1usize), (4, 1, 1), (5, 1, 1), (3, 2, 4), (4, 2, 5)]
        {
            let space = ProjSpace::new(FiniteFieldSpec::gf(q).unwrap(), n).unwrap();
            let idx = SpaceIndex::build(&space).unwrap();
            for p in 0..idx.n_points() {
                assert_eq!(idx.lines_through[p].len(), expect);
            }
        }
    }
}

use crate::error::{ProjectiveError, Result};
use crate::space::SpaceIndex;
use std::collections::HashSet;

/// Desk-scale guard: spaces with more points than this are refused.
pub const MAX_POINTS: usize = 30;

/// Result of the exhaustive collineation enumeration: the total count of
/// incidence-preserving point bijections, and a small generating set
/// extracted on the fly (closure-checked, so `count` is cross-validated
/// against the generated group order).
#[derive(Debug, Clone)]
pub struct CollineationGroup {
    pub count: usize,
    pub generators: Vec<Vec<usize>>,
}

/// Enumerates every incidence-preserving bijection of the point set by
/// backtracking, pruning with "lines map to lines" (images of points on a
/// line with two mapped points are confined to the image line). For
/// n >= 2 the count equals |PΓL(n+1, q)|; for a single-line geometry every
/// bijection qualifies, giving (q+1)!.
pub fn enumerate_collineations(idx: &SpaceIndex) -> Result<CollineationGroup> {
    let n = idx.n_points();
    if n > MAX_POINTS {
        return Err(ProjectiveError::TooLarge(n, MAX_POINTS));
    }

    // assignment order: greedy, preferring points covered by many pairs of
    // already-ordered points, so images get forced early
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    order.push(0);
    placed[0] = true;
    while order.len() < n {
        let mut best: Option<(usize, usize)> = None; // (score, point); max score, min index
        for p in 0..n {
            if placed[p] {
                continue;
            }
            let mut score = 0usize;
            for (i, &a) in order.iter().enumerate() {
                for &b in order.iter().skip(i + 1) {
                    if idx.collinear(a, b, p) {
                        score += 1;
                    }
                }
            }
            if best.map(|(s, _)| score > s).unwrap_or(true) {
                best = Some((score, p));
            }
        }
        let (_, pick) = best.expect("some point remains");
        placed[pick] = true;
        order.push(pick);
    }

    let mut state = SearchState {
        idx,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        count: 0,
        group: HashSet::new(),
        generators: Vec::new(),
    };
    state.group.insert((0..n).collect::<Vec<usize>>());
    search(&mut state, 0);

    // the closure of the extracted generators must reproduce every
    // collineation found
    debug_assert_eq!(state.group.len(), state.count);
    Ok(CollineationGroup { count: state.count, generators: state.generators })
}

struct SearchState<'a> {
    idx: &'a SpaceIndex,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    count: usize,
    group: HashSet<Vec<usize>>,
    generators: Vec<Vec<usize>>,
}

fn search(st: &mut SearchState<'_>, depth: usize) {
    let n = st.idx.n_points();
    if depth == n {
        st.count += 1;
        absorb(st);
        return;
    }
    let x = st.order[depth];
    'candidate: for u in 0..n {
        if st.used[u] {
            continue;
        }
        // both directions of incidence preservation against mapped pairs
        for i in 0..depth {
            let a = st.order[i];
            for &b in st.order.iter().take(i) {
                if st.idx.collinear(a, b, x) != st.idx.collinear(st.map[a], st.map[b], u) {
                    continue 'candidate;
                }
            }
        }
        st.map[x] = u;
        st.used[u] = true;
        search(st, depth + 1);
        st.map[x] = usize::MAX;
        st.used[u] = false;
    }
}

/// Adds the just-found collineation as a generator if the current closure
/// misses it, then re-closes by breadth-first products with the generator
/// set, so a small generating set falls out of the enumeration.
fn absorb(st: &mut SearchState<'_>) {
    if st.group.contains(&st.map) {
        return;
    }
    st.generators.push(st.map.clone());
    st.group.insert(st.map.clone());
    let mut queue: Vec<Vec<usize>> = st.group.iter().cloned().collect();
    while let Some(e) = queue.pop() {
        for g in &st.generators {
            // finite group: closure under products covers inverses too
            let eg: Vec<usize> = e.iter().map(|&i| g[i]).collect();
            if st.group.insert(eg.clone()) {
                queue.push(eg);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::ProjSpace;
    use hyperlab_algebra::FiniteFieldSpec;

    fn index(q: u64, n: usize) -> SpaceIndex {
        let space = ProjSpace::new(FiniteFieldSpec::gf(q).unwrap(), n).unwrap();
        SpaceIndex::build(&space).unwrap()
    }

    #[test]
    fn p1_f3_has_24_collineations() {
        // single line: every bijection of the 4 points, 4! = 24
        let g = enumerate_collineations(&index(3, 1)).unwrap();
        assert_eq!(g.count, 24);
        assert!(!g.generators.is_empty());
    }

    #[test]
    fn p1_f4_has_120_collineations() {
        let g = enumerate_collineations(&index(4, 1)).unwrap();
        assert_eq!(g.count, 120); // 5!
    }

    #[test]
    fn guard_rejects_large_spaces() {
        let err = enumerate_collineations(&index(5, 2)).unwrap_err();
        assert_eq!(err, ProjectiveError::TooLarge(31, MAX_POINTS));
    }
}

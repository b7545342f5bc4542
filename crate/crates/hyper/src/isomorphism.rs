use crate::table::MultiOpTable;

/// Backtracking search for a zero-preserving bijection with
/// σ(x ⊞ y) = σ(x) ⊞ σ(y), multiplicative as well when both tables carry a
/// multiplication. Returns the first witness found (as `map[i] = image of
/// i`) or `None`. Candidates are pruned by per-element invariant
/// signatures (multisets of sum-set sizes) before the search starts.
pub fn find_isomorphism(h1: &MultiOpTable, h2: &MultiOpTable) -> Option<Vec<usize>> {
    if h1.size() != h2.size() {
        return None;
    }
    let n = h1.size();
    let use_mul = h1.has_mul() && h2.has_mul();

    let sig = |h: &MultiOpTable, x: usize| -> (Vec<usize>, usize, bool, bool) {
        let mut sizes: Vec<usize> = (0..n).map(|y| h.sum(x, y).len()).collect();
        sizes.sort_unstable();
        (
            sizes,
            h.sum(x, x).len(),
            h.sum_contains(x, x, x),
            h.sum_contains(x, x, h.zero()),
        )
    };
    let sig1: Vec<_> = (0..n).map(|x| sig(h1, x)).collect();
    let sig2: Vec<_> = (0..n).map(|x| sig(h2, x)).collect();

    // candidate targets per element; zero maps to zero
    let mut candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            if x == h1.zero() {
                vec![h2.zero()]
            } else {
                (0..n).filter(|&u| u != h2.zero() && sig2[u] == sig1[x]).collect()
            }
        })
        .collect();
    if use_mul {
        if let (Some(e1), Some(e2)) = (h1.one(), h2.one()) {
            candidates[e1].retain(|&u| u == e2);
        }
    }
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    // assign elements in order of fewest candidates, zero first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (x != h1.zero(), candidates[x].len(), x));

    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used: Vec<bool> = vec![false; n];
    if backtrack(h1, h2, use_mul, &order, &candidates, &mut map, &mut used, 0) {
        let found: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
        debug_assert!(verify_isomorphism(h1, h2, &found));
        Some(found)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    h1: &MultiOpTable,
    h2: &MultiOpTable,
    use_mul: bool,
    order: &[usize],
    candidates: &[Vec<usize>],
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == order.len() {
        let full: Vec<usize> = map.iter().map(|m| m.unwrap()).collect();
        return verify_isomorphism(h1, h2, &full);
    }
    let x = order[depth];
    for &u in &candidates[x] {
        if used[u] {
            continue;
        }
        map[x] = Some(u);
        used[u] = true;
        if consistent(h1, h2, use_mul, map, x) && backtrack(h1, h2, use_mul, order, candidates, map, used, depth + 1)
        {
            return true;
        }
        map[x] = None;
        used[u] = false;
    }
    false
}

/// Partial-consistency filter after assigning `x`: for every mapped pair
/// involving `x`, sum sets must agree in size, mapped members must land in
/// the image sum, and multiplication (when used) must commute with the
/// partial map wherever it is determined.
fn consistent(h1: &MultiOpTable, h2: &MultiOpTable, use_mul: bool, map: &[Option<usize>], x: usize) -> bool {
    let n = h1.size();
    let sx = map[x].unwrap();
    for a in 0..n {
        let Some(sa) = map[a] else { continue };
        for (i, j, si, sj) in [(x, a, sx, sa), (a, x, sa, sx)] {
            let s = h1.sum(i, j);
            let t = h2.sum(si, sj);
            if s.len() != t.len() {
                return false;
            }
            for &c in s {
                if let Some(sc) = map[c] {
                    if !t.contains(&sc) {
                        return false;
                    }
                }
            }
            if use_mul {
                let p = h1.mul_of(i, j).unwrap();
                let q = h2.mul_of(si, sj).unwrap();
                if let Some(sp) = map[p] {
                    if sp != q {
                        return false;
                    }
                }
            }
        }
        if i_breaks_injectivity(h1, h2, map, x, a) {
            return false;
        }
    }
    true
}

/// If the image sum already contains every image it can take but a mapped
/// preimage is missing, the branch is dead. Kept separate for clarity.
fn i_breaks_injectivity(
    h1: &MultiOpTable,
    h2: &MultiOpTable,
    map: &[Option<usize>],
    x: usize,
    a: usize,
) -> bool {
    let (sx, sa) = (map[x].unwrap(), map[a].unwrap());
    let s = h1.sum(x, a);
    let t = h2.sum(sx, sa);
    // every mapped target in t must be hit by a mapped member of s
    let mapped_sources = s.iter().filter(|&&c| map[c].is_some()).count();
    let hit_targets = t.iter().filter(|&&u| s.iter().any(|&c| map[c] == Some(u))).count();
    mapped_sources != hit_targets
}

/// Full verification of a complete map; independent of the search pruning.
pub fn verify_isomorphism(h1: &MultiOpTable, h2: &MultiOpTable, map: &[usize]) -> bool {
    let n = h1.size();
    if h2.size() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &u in map {
        if u >= n || seen[u] {
            return false;
        }
        seen[u] = true;
    }
    if map[h1.zero()] != h2.zero() {
        return false;
    }
    let use_mul = h1.has_mul() && h2.has_mul();
    for i in 0..n {
        for j in 0..n {
            let mut image: Vec<usize> = h1.sum(i, j).iter().map(|&c| map[c]).collect();
            image.sort_unstable();
            if image != h2.sum(map[i], map[j]) {
                return false;
            }
            if use_mul && map[h1.mul_of(i, j).unwrap()] != h2.mul_of(map[i], map[j]).unwrap() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::build_factor_hyperfield;
    use hyperlab_algebra::FiniteFieldSpec;

    fn krasner_k() -> MultiOpTable {
        MultiOpTable::build(
            2,
            0,
            |i, j| match (i, j) {
                (0, 0) => vec![0],
                (1, 1) => vec![0, 1],
                _ => vec![1],
            },
            Some(&|i, j| if i == 1 && j == 1 { 1 } else { 0 }),
        )
        .unwrap()
    }

    #[test]
    fn k_is_isomorphic_to_f9_mod_units() {
        let f9 = FiniteFieldSpec::gf(9).unwrap();
        let t: Vec<_> =
            f9.elements().into_iter().filter(|e| !e.is_zero()).collect();
        let ft = build_factor_hyperfield(&f9, &t).unwrap();
        let iso = find_isomorphism(&krasner_k(), &ft.table).unwrap();
        assert_eq!(iso, vec![0, 1]);
    }

    #[test]
    fn size_mismatch_gives_none() {
        let f9 = FiniteFieldSpec::gf(9).unwrap();
        let t = vec![f9.one(), f9.from_int(2)];
        let ft = build_factor_hyperfield(&f9, &t).unwrap();
        assert!(find_isomorphism(&krasner_k(), &ft.table).is_none());
    }

    #[test]
    fn symmetry_of_witness_existence() {
        let f9 = FiniteFieldSpec::gf(9).unwrap();
        let f25 = FiniteFieldSpec::gf(25).unwrap();
        let t9 = vec![f9.one(), f9.from_int(2)];
        let t25: Vec<_> = (1..5).map(|v| f25.from_int(v)).collect();
        let a = build_factor_hyperfield(&f9, &t9).unwrap().table;
        let b = build_factor_hyperfield(&f25, &t25).unwrap().table;
        // same direction both ways for an actual isomorphism pair
        assert!(find_isomorphism(&a, &a.clone()).is_some());
        // P^1(F_3)-sized vs P^1(F_5)-sized tables: no witness either way
        assert_eq!(find_isomorphism(&a, &b).is_none(), find_isomorphism(&b, &a).is_none());
        assert!(find_isomorphism(&a, &b).is_none());
    }
}

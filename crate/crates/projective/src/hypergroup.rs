use crate::error::{ProjectiveError, Result};
use crate::space::SpaceIndex;
use hyperlab_hyper::MultiOpTable;

/// The canonical hypergroup H(P, L) of a projective space: carrier index 0
/// is the adjoined neutral element, index p+1 is point p of the index.
/// For distinct points x ⊞ y = l(x,y) \ {x, y}; x ⊞ x = {0, x};
/// x ⊞ 0 = {x}. F_2 is rejected (its lines have only 3 points).
pub fn incidence_hypergroup(idx: &SpaceIndex) -> Result<MultiOpTable> {
    if idx.space.field().order() == 2 {
        return Err(ProjectiveError::ExcludedField);
    }
    let n = idx.n_points();
    let size = n + 1;
    let mut sums: Vec<Vec<usize>> = vec![Vec::new(); size * size];
    sums[0] = vec![0]; // 0 ⊞ 0
    for p in 0..n {
        sums[(p + 1) * size] = vec![p + 1];
        sums[p + 1] = vec![p + 1];
        sums[(p + 1) * size + (p + 1)] = vec![0, p + 1];
        for q in 0..n {
            if p == q {
                continue;
            }
            let line = idx.line_id(p, q).expect("distinct points");
            let set: Vec<usize> =
                idx.lines[line].iter().filter(|&&r| r != p && r != q).map(|&r| r + 1).collect();
            sums[(p + 1) * size + (q + 1)] = set;
        }
    }
    let mut labels = vec!["0".to_string()];
    labels.extend(idx.points.iter().map(|p| p.to_string()));
    Ok(MultiOpTable::from_parts(size, 0, sums, None)?.with_labels(labels))
}

/// The converse construction: from a table satisfying x ⊞ x = {0, x} for
/// all x, recover the projective geometry with point set the nonzero
/// indices and lines l(x,y) = (x ⊞ y) ∪ {x, y}. Returns the distinct
/// lines as sorted index sets over the table's carrier.
pub fn geometry_from_kvector_table(table: &MultiOpTable) -> Result<Vec<Vec<usize>>> {
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
            return Err(ProjectiveError::Hyper(hyperlab_hyper::HyperError::BrokenConstruction(
                format!("x ⊞ x != {{0, x}} at index {x}"),
            )));
        }
    }
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for x in 0..table.size() {
        if x == zero {
            continue;
        }
        for y in 0..table.size() {
            if y == zero || y == x {
                continue;
            }
            let mut line: Vec<usize> = table.sum(x, y).to_vec();
            line.push(x);
            line.push(y);
            line.sort_unstable();
            line.dedup();
            lines.push(line);
        }
    }
    lines.sort();
    lines.dedup();
    Ok(lines)
}

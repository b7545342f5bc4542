use crate::error::{ProjectiveError, Result};
use crate::space::{ProjSpace, SpaceIndex};
use hyperlab_algebra::{ExtensionSpec, FieldElement, Polynomial};
use hyperlab_hyper::AxiomCheck;
use std::collections::HashSet;
use std::sync::Arc;

/// An abelian group law on the points of P^n, obtained by identifying the
/// space with E^x / F_q^x for the extension E = F_q[Y]/(modulus) through
/// the power basis. Translations by group elements are collineations.
///
/// The construction needs a degree-(n+1) field extension of the base,
/// which finite fields supply in every degree; over the reals no such
/// extension exists beyond degree 2, so projective spaces of dimension
/// above 1 over R carry no structure of this kind.
#[derive(Debug)]
pub struct IncidenceGroup {
    pub index: SpaceIndex,
    /// op[a * m + b] = index of the product point.
    pub op: Vec<usize>,
    pub identity: usize,
}

impl IncidenceGroup {
    pub fn apply(&self, a: usize, b: usize) -> usize {
        self.op[a * self.index.n_points() + b]
    }

    /// Order of the group (the point count).
    pub fn order(&self) -> usize {
        self.index.n_points()
    }

    /// An element whose powers exhaust the group, if one exists.
    pub fn cyclic_generator(&self) -> Option<usize> {
        let m = self.order();
        (0..m).find(|&g| {
            let mut seen = vec![false; m];
            let mut acc = self.identity;
            for _ in 0..m {
                acc = self.apply(acc, g);
                seen[acc] = true;
            }
            seen.iter().all(|&s| s)
        })
    }
}

/// Identifies P^n over F_q with the unit classes of F_q[Y]/(modulus)
/// modulo F_q^x via the power basis: the point (x_0 : ... : x_n)
/// corresponds to the class of x_0 + x_1 Y + ... + x_n Y^n, and the group
/// law is coset multiplication. The modulus must be monic irreducible of
/// degree n+1 over the space's field.
pub fn build_incidence_group(
    space: &Arc<ProjSpace>,
    modulus: &Polynomial<FieldElement>,
) -> Result<IncidenceGroup> {
    let expected = space.dim() + 1;
    match modulus.degree() {
        Some(d) if d == expected => {}
        d => {
            return Err(ProjectiveError::DegreeMismatch {
                expected,
                got: d.unwrap_or(0),
            })
        }
    }
    // ExtensionSpec validates monicity and irreducibility
    let ext = ExtensionSpec::new(Arc::clone(space.field()), modulus.clone())?;
    let index = SpaceIndex::build(space)?;
    let m = index.n_points();

    let as_ext = |coords: &[FieldElement]| ext.element(coords).expect("power basis");
    let mut op = vec![0usize; m * m];
    for a in 0..m {
        let ea = as_ext(index.points[a].coords());
        for b in 0..m {
            let eb = as_ext(index.points[b].coords());
            let prod = ea.checked_mul(&eb)?;
            let point = space.point(prod.coeffs())?;
            op[a * m + b] = index.points.binary_search(&point).expect("closed");
        }
    }
    let identity_point = space.point(ext.one().coeffs())?;
    let identity = index.points.binary_search(&identity_point).expect("identity");
    Ok(IncidenceGroup { index, op, identity })
}

/// Report of the incidence-group verification.
#[derive(Debug, Clone)]
pub struct IncidenceGroupReport {
    pub associative: AxiomCheck,
    pub commutative: AxiomCheck,
    pub identity_ok: AxiomCheck,
    pub inverses: AxiomCheck,
    /// Translations are collineations: a * l is a line for every a, l.
    pub translations: AxiomCheck,
}

impl IncidenceGroupReport {
    pub fn all_pass(&self) -> bool {
        self.associative.passed()
            && self.commutative.passed()
            && self.identity_ok.passed()
            && self.inverses.passed()
            && self.translations.passed()
    }
}

fn record(check: &mut AxiomCheck, witness: &[usize]) {
    if check.witness.is_none() {
        check.witness = Some(witness.to_vec());
    }
    check.violations += 1;
}

/// Exhaustive abelian-group verification plus the incidence condition:
/// the image of every line under every translation is again a line (of
/// the same size q+1).
pub fn verify_incidence_group(g: &IncidenceGroup) -> IncidenceGroupReport {
    let m = g.order();
    let mut associative = AxiomCheck { name: "group-associative", violations: 0, witness: None };
    let mut commutative = AxiomCheck { name: "group-commutative", violations: 0, witness: None };
    let mut identity_ok = AxiomCheck { name: "group-identity", violations: 0, witness: None };
    let mut inverses = AxiomCheck { name: "group-inverses", violations: 0, witness: None };
    let mut translations =
        AxiomCheck { name: "translations-are-collineations", violations: 0, witness: None };

    for a in 0..m {
        if g.apply(g.identity, a) != a || g.apply(a, g.identity) != a {
            record(&mut identity_ok, &[a]);
        }
        if !(0..m).any(|b| g.apply(a, b) == g.identity) {
            record(&mut inverses, &[a]);
        }
        for b in 0..m {
            if a < b && g.apply(a, b) != g.apply(b, a) {
                record(&mut commutative, &[a, b]);
            }
            for c in 0..m {
                if g.apply(g.apply(a, b), c) != g.apply(a, g.apply(b, c)) {
                    record(&mut associative, &[a, b, c]);
                }
            }
        }
    }

    let line_set: HashSet<Vec<usize>> = g.index.lines.iter().cloned().collect();
    let expected_len = g.index.space.field().order() as usize + 1;
    for a in 0..m {
        for (lid, line) in g.index.lines.iter().enumerate() {
            let mut image: Vec<usize> = line.iter().map(|&p| g.apply(a, p)).collect();
            image.sort_unstable();
            if image.len() != expected_len || !line_set.contains(&image) {
                record(&mut translations, &[a, lid]);
            }
        }
    }

    IncidenceGroupReport { associative, commutative, identity_ok, inverses, translations }
}

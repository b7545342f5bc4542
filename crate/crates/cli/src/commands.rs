use crate::report::{Report, Status};
use crate::task::{Command, TaskSpec};
use hyperlab_algebra::{rat, FieldCarrier, FieldElement, FiniteFieldSpec, Polynomial, RatFunc};
use hyperlab_hyper::{
    build_factor_hyperfield, build_fraction_hyperfield, check_canonical_hypergroup,
    check_hyperring, subgroup_generated, AxiomCheck, PolyCosetRing,
};
use hyperlab_kvector::KVectorSpace;
use hyperlab_localnum::{
    count_quadratic_extensions, krasner_separates, KrasnerVerdict, LocalFieldSpec,
};
use hyperlab_projective::{
    build_incidence_group, check_desargues, check_projective_axioms, enumerate_collineations,
    incidence_hypergroup, verify_incidence_group, ProjSpace, SpaceIndex,
};
use num_rational::BigRational;
use serde_json::{json, Value};
use std::sync::Arc;

type CmdResult = Result<(Status, Vec<String>, Value), String>;

/// Dispatches a validated task to its owning module and assembles the
/// deterministic report. Exit codes: pass 0, fail 1, error 2,
/// inconclusive 3.
pub fn run_task(task: &TaskSpec) -> Report {
    let outcome = match task.command {
        Command::CheckAxioms => cmd_check_axioms(task),
        Command::ProjectiveHypergroup => cmd_projective_hypergroup(task),
        Command::Desargues => cmd_desargues(task),
        Command::Collineations => cmd_collineations(task),
        Command::IncidenceGroup => cmd_incidence_group(task),
        Command::KDim => cmd_kdim(task),
        Command::FactorHyperfield => cmd_factor_hyperfield(task),
        Command::Krasner => cmd_krasner(task),
        Command::QuadExtensions => cmd_quad_extensions(task),
        Command::FractionCheck => cmd_fraction_check(task),
    };
    match outcome {
        Ok((status, witnesses, payload)) => Report::for_task(task, status, witnesses, payload),
        Err(message) => {
            Report::for_task(task, Status::Error, Vec::new(), json!({ "error": message }))
        }
    }
}

fn err<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn get_u64(task: &TaskSpec, key: &str) -> Result<u64, String> {
    err(err(task.require(key))?.as_u64(key))
}

fn field(q: u64) -> Result<Arc<FiniteFieldSpec>, String> {
    err(FiniteFieldSpec::gf(q))
}

fn space_index(task: &TaskSpec) -> Result<SpaceIndex, String> {
    let q = get_u64(task, "q")?;
    let n = get_u64(task, "n")? as usize;
    let space = err(ProjSpace::new(field(q)?, n))?;
    err(SpaceIndex::build(&space))
}

fn check_witnesses(checks: &[&AxiomCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| match &c.witness {
            Some(w) => format!("{} {:?}", c.name, w),
            None => c.name.to_string(),
        })
        .collect()
}

fn checks_json(checks: &[&AxiomCheck]) -> Value {
    let mut map = serde_json::Map::new();
    for c in checks {
        map.insert(c.name.to_string(), json!({ "violations": c.violations }));
    }
    Value::Object(map)
}

fn cmd_check_axioms(task: &TaskSpec) -> CmdResult {
    let idx = space_index(task)?;
    let proj = err(check_projective_axioms(&idx))?;
    let table = err(incidence_hypergroup(&idx))?;
    let hyper = check_canonical_hypergroup(&table);
    let proj_checks = [&proj.p1_unique_line, &proj.p2_veblen_young, &proj.p3_four_points];
    let all_checks: Vec<&AxiomCheck> =
        proj_checks.iter().copied().chain(hyper.checks()).collect();
    let witnesses = check_witnesses(&all_checks);
    let status = if proj.all_pass() && hyper.all_pass() { Status::Pass } else { Status::Fail };
    let payload = json!({
        "carrier": table.size(),
        "checks": checks_json(&all_checks),
        "points": idx.n_points(),
    });
    Ok((status, witnesses, payload))
}

fn cmd_projective_hypergroup(task: &TaskSpec) -> CmdResult {
    let idx = space_index(task)?;
    let table = err(incidence_hypergroup(&idx))?;
    let report = check_canonical_hypergroup(&table);
    let status = if report.all_pass() { Status::Pass } else { Status::Fail };
    let payload = json!({
        "carrier": table.size(),
        "table": table.serialize(),
    });
    Ok((status, check_witnesses(&report.checks()), payload))
}

fn cmd_desargues(task: &TaskSpec) -> CmdResult {
    let idx = space_index(task)?;
    let report = err(check_desargues(&idx))?;
    let status = if report.all_pass() { Status::Pass } else { Status::Fail };
    let witnesses = check_witnesses(&[&report.check]);
    let payload = json!({ "configurations": report.configurations });
    Ok((status, witnesses, payload))
}

fn cmd_collineations(task: &TaskSpec) -> CmdResult {
    let idx = space_index(task)?;
    let group = err(enumerate_collineations(&idx))?;
    let payload = json!({
        "count": group.count,
        "generators": group.generators,
    });
    Ok((Status::Pass, Vec::new(), payload))
}

fn cmd_incidence_group(task: &TaskSpec) -> CmdResult {
    let q = get_u64(task, "q")?;
    let n = get_u64(task, "n")? as usize;
    let base = field(q)?;
    let space = err(ProjSpace::new(Arc::clone(&base), n))?;
    let modulus = match task.params.get("modulus") {
        Some(v) => {
            let coeffs = err(v.as_int_list("modulus"))?;
            let p = base.characteristic() as i64;
            Polynomial::new(
                coeffs.iter().map(|&c| base.from_int(c.rem_euclid(p) as u64)).collect(),
            )
        }
        None => err(hyperlab_algebra::find_irreducible(&base, n + 1))?,
    };
    let group = err(build_incidence_group(&space, &modulus))?;
    let report = verify_incidence_group(&group);
    let checks = [
        &report.associative,
        &report.commutative,
        &report.identity_ok,
        &report.inverses,
        &report.translations,
    ];
    let status = if report.all_pass() { Status::Pass } else { Status::Fail };
    let payload = json!({
        "checks": checks_json(&checks),
        "cyclic": group.cyclic_generator().is_some(),
        "identity": group.identity,
        "order": group.order(),
    });
    Ok((status, check_witnesses(&checks), payload))
}

fn cmd_kdim(task: &TaskSpec) -> CmdResult {
    let n = get_u64(task, "n")? as usize;
    let idx = space_index(task)?;
    let table = err(incidence_hypergroup(&idx))?;
    let v = err(KVectorSpace::wrap(table))?;
    let dim = err(v.dimension_with_seed(task.seed, hyperlab_kvector::DIMENSION_SHUFFLES))?;
    let status = if dim == n + 1 { Status::Pass } else { Status::Fail };
    let payload = json!({ "dimension": dim, "expected": n + 1 });
    Ok((status, Vec::new(), payload))
}

fn cmd_factor_hyperfield(task: &TaskSpec) -> CmdResult {
    let q = get_u64(task, "q")?;
    let base = field(q)?;
    let gens_raw = err(err(task.require("t"))?.as_nested_list("t"))?;
    let p = base.characteristic() as i64;
    let gens: Result<Vec<FieldElement>, String> = gens_raw
        .iter()
        .map(|coeffs| {
            let v: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
            err(base.element(&v))
        })
        .collect();
    let t = err(subgroup_generated(&base, &gens?))?;
    let factor = err(build_factor_hyperfield(&base, &t))?;
    let ring_report = err(check_hyperring(&factor.table))?;
    let status = if ring_report.passes_hyperring() { Status::Pass } else { Status::Fail };
    let payload = json!({
        "carrier": factor.table.size(),
        "hyperfield": ring_report.is_hyperfield(),
        "subgroup_order": t.len(),
        "table": factor.table.serialize(),
    });
    Ok((status, check_witnesses(&ring_report.checks()), payload))
}

fn int_list_poly(task: &TaskSpec, key: &str) -> Result<Polynomial<BigRational>, String> {
    let coeffs = err(err(task.require(key))?.as_int_list(key))?;
    Ok(Polynomial::new(coeffs.into_iter().map(rat).collect()))
}

fn cmd_krasner(task: &TaskSpec) -> CmdResult {
    let p = get_u64(task, "p")?;
    let spec = err(LocalFieldSpec::padic(p))?;
    let f = int_list_poly(task, "f")?;
    let g = int_list_poly(task, "g")?;
    let verdict = err(krasner_separates(&f, &g, &spec))?;
    let (status, name) = match verdict {
        KrasnerVerdict::CertifiedIsomorphic => (Status::Pass, "certified-isomorphic"),
        KrasnerVerdict::Inconclusive => (Status::Inconclusive, "inconclusive"),
    };
    Ok((status, Vec::new(), json!({ "verdict": name })))
}

fn cmd_quad_extensions(task: &TaskSpec) -> CmdResult {
    let kind = err(err(task.require("kind"))?.as_word("kind"))?;
    let spec = match kind {
        "padic" => err(LocalFieldSpec::padic(get_u64(task, "p")?))?,
        "laurent" => LocalFieldSpec::laurent(field(get_u64(task, "q")?)?),
        other => return Err(format!("kind must be padic or laurent, got '{other}'")),
    };
    let count = err(count_quadratic_extensions(&spec))?;
    Ok((Status::Pass, Vec::new(), json!({ "count": count, "field": spec.to_string() })))
}

fn cmd_fraction_check(task: &TaskSpec) -> CmdResult {
    let q = get_u64(task, "q")?;
    let cap = err(err(task.require("cap"))?.as_usize("cap"))?;
    let base = field(q)?;
    let ring = PolyCosetRing::new(Arc::clone(&base));
    let ft = err(build_fraction_hyperfield(&ring, cap))?;

    // independent oracle on the full rational function field: membership
    // of zT in (x/x')T ⊞ (y/y')T holds exactly when z = (x/x')t + (y/y')s
    // for scalars t, s, computed with exact rational-function arithmetic
    let units: Vec<FieldElement> =
        base.elements().into_iter().filter(|e| !e.is_zero()).collect();
    let as_ratfunc = |f: &hyperlab_hyper::BoundedFraction| -> Result<RatFunc, String> {
        err(RatFunc::new(f.num().clone(), f.den().clone()))
    };
    let one_poly = Polynomial::new(vec![base.one()]);
    let mut mismatches: Vec<String> = Vec::new();
    let mut escaped_pairs = 0usize;
    let size = ft.table.size();
    for i in 0..size {
        let fi = as_ratfunc(&ft.fractions[i])?;
        for j in 0..size {
            let fj = as_ratfunc(&ft.fractions[j])?;
            // oracle member classes, kept only when they fit the cap
            let mut oracle_in_cap: Vec<usize> = Vec::new();
            let mut oracle_escapes = false;
            for t in &units {
                let ti = err(RatFunc::new(
                    Polynomial::new(vec![t.clone()]),
                    one_poly.clone(),
                ))?;
                for s in &units {
                    let si = err(RatFunc::new(
                        Polynomial::new(vec![s.clone()]),
                        one_poly.clone(),
                    ))?;
                    let w = err(err(fi.mul(&ti))?.add(&err(fj.mul(&si))?))?;
                    let frac = if w.is_zero() {
                        hyperlab_hyper::BoundedFraction::zero(&base)
                    } else {
                        err(hyperlab_hyper::BoundedFraction::new(
                            w.num().clone(),
                            w.den().clone(),
                        ))?
                    };
                    match ft.index_of(&frac) {
                        Some(k) => oracle_in_cap.push(k),
                        None => oracle_escapes = true,
                    }
                }
            }
            oracle_in_cap.sort_unstable();
            oracle_in_cap.dedup();
            if ft.table.sum(i, j) != oracle_in_cap.as_slice() {
                mismatches.push(format!("membership mismatch at ({i},{j})"));
            }
            let flagged = ft.escaped.contains(&(i, j));
            if flagged != oracle_escapes {
                mismatches.push(format!("escape flag mismatch at ({i},{j})"));
            }
            if flagged {
                escaped_pairs += 1;
            }
        }
    }
    let status = if mismatches.is_empty() { Status::Pass } else { Status::Fail };
    let payload = json!({
        "carrier": size,
        "escaped_pairs": escaped_pairs,
        "in_cap_pairs": size * size - escaped_pairs,
    });
    Ok((status, mismatches, payload))
}

//! Valuation invariants over random truncated numbers, and oracle
//! cross-checks of the square-class and Krasner machinery against brute
//! force at finite precision.

use hyperlab_algebra::{rat, Polynomial};
use hyperlab_localnum::{
    count_quadratic_extensions, krasner_separates, square_class, KrasnerVerdict, LocalFieldSpec,
    LocalNumber, ValExp,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn q5() -> LocalFieldSpec {
    LocalFieldSpec::padic(5).unwrap()
}

fn number(spec: &LocalFieldSpec, val: i64, digits: Vec<u64>) -> LocalNumber {
    LocalNumber::padic_from_parts(spec, val, digits).unwrap()
}

fn digit_vec() -> impl Strategy<Value = (i64, Vec<u64>)> {
    (
        -4i64..4,
        prop::collection::vec(0u64..5, 8).prop_map(|mut v| {
            if v[0] == 0 {
                v[0] = 1;
            }
            v
        }),
    )
}

proptest! {
    /// Ultrametric law at precision 8: v(x + y) >= min(v(x), v(y)), with
    /// equality whenever the valuations differ.
    #[test]
    fn ultrametric_law((v1, d1) in digit_vec(), (v2, d2) in digit_vec()) {
        let spec = q5();
        let x = number(&spec, v1, d1);
        let y = number(&spec, v2, d2);
        let min = x.valuation().min(y.valuation());
        match x.add(&y) {
            Ok(sum) => {
                prop_assert!(sum.valuation() >= min);
                if x.valuation() != y.valuation() {
                    prop_assert_eq!(sum.valuation(), min);
                }
            }
            Err(_) => {
                // full cancellation is only possible at equal valuations
                prop_assert_eq!(x.valuation(), y.valuation());
            }
        }
    }

    /// v(xy) = v(x) + v(y), exactly, always.
    #[test]
    fn multiplicativity((v1, d1) in digit_vec(), (v2, d2) in digit_vec()) {
        let spec = q5();
        let x = number(&spec, v1, d1);
        let y = number(&spec, v2, d2);
        let prod = x.mul(&y).unwrap();
        prop_assert_eq!(prod.valuation(), x.valuation().add(&y.valuation()));
        // and against exact rational arithmetic on the truncations
        let exact = x.truncated_rational().unwrap() * y.truncated_rational().unwrap();
        prop_assert_eq!(
            hyperlab_localnum::padic_norm_rational(&exact, 5).unwrap(),
            prod.valuation()
        );
    }
}

#[test]
fn quadratic_extension_count_is_3_for_all_odd_p_up_to_13() {
    for p in [3u64, 5, 7, 11, 13] {
        let spec = LocalFieldSpec::padic(p).unwrap();
        assert_eq!(count_quadratic_extensions(&spec).unwrap(), 3, "p = {p}");
    }
}

/// Brute-force square oracle in Z_p at 3-digit precision: a unit u is a
/// square iff some x^2 = u mod p^3 (sound for odd p by Hensel).
fn unit_square_mod_p3(u: i64, p: i64) -> bool {
    let m = p.pow(3);
    (0..m).any(|x| (x * x - u).rem_euclid(m) == 0)
}

#[test]
fn square_classes_match_brute_force_over_q5_and_q7() {
    for p in [5i64, 7] {
        let spec = LocalFieldSpec::padic(p as u64).unwrap();
        // candidates: units and uniformizer multiples
        let candidates: Vec<i64> =
            (1..p).flat_map(|u| [u, u * p]).collect();
        for &a in &candidates {
            for &b in &candidates {
                let ca = square_class(&LocalNumber::from_integer(&spec, a, 6).unwrap()).unwrap();
                let cb = square_class(&LocalNumber::from_integer(&spec, b, 6).unwrap()).unwrap();
                // same class iff a/b is a square iff a*b is a square
                // (both have norm-square product structure at these vals)
                let same_parity = (a_val(a, p) % 2) == (a_val(b, p) % 2);
                let ratio_square =
                    same_parity && unit_square_mod_p3(unit_part(a, p) * unit_part(b, p), p);
                assert_eq!(ca == cb, ratio_square, "p={p}, a={a}, b={b}");
            }
        }
    }
}

fn a_val(mut a: i64, p: i64) -> i64 {
    let mut v = 0;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    v
}

fn unit_part(mut a: i64, p: i64) -> i64 {
    while a % p == 0 {
        a /= p;
    }
    a
}

#[test]
fn q2_unit_classes_match_brute_force_mod_32() {
    // squares of odd numbers mod 2^5 are exactly the residues 1 mod 8
    let squares: std::collections::BTreeSet<i64> =
        (1..32).step_by(2).map(|x| (x * x) % 32).collect();
    assert_eq!(squares, [1i64, 9, 17, 25].into_iter().collect());
    let spec = LocalFieldSpec::padic(2).unwrap();
    for u in [1i64, 3, 5, 7] {
        let c = square_class(&LocalNumber::from_integer(&spec, u, 6).unwrap()).unwrap();
        assert_eq!(c.is_trivial(), u == 1);
    }
}

#[test]
fn f3_laurent_one_units_are_squares() {
    // (a0 + a1 t + a2 t^2)^2 enumerated mod t^3 over F_3: the one-units
    // 1 + c1 t + c2 t^2 are all hit, certifying the class count of 3
    let f3 = hyperlab_algebra::FiniteFieldSpec::prime(3).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for a0 in 1u64..3 {
        for a1 in 0u64..3 {
            for a2 in 0u64..3 {
                let (b0, b1, b2) = (a0 * a0 % 3, 2 * a0 * a1 % 3, (2 * a0 * a2 + a1 * a1) % 3);
                seen.insert((b0, b1, b2));
            }
        }
    }
    for c1 in 0u64..3 {
        for c2 in 0u64..3 {
            assert!(seen.contains(&(1, c1, c2)), "one-unit 1+{c1}t+{c2}t^2 must be a square");
        }
    }
    let spec = LocalFieldSpec::laurent(f3);
    assert_eq!(count_quadratic_extensions(&spec).unwrap(), 3);
}

#[test]
fn certified_pairs_agree_with_square_class_oracle_small_corpus() {
    // all monic quadratics with coefficients in -8..=8 over Q_5: whenever
    // the criterion certifies, the discriminant square classes agree
    let spec = q5();
    let mut eligible: Vec<(i64, i64)> = Vec::new();
    for b in -8i64..=8 {
        for c in -8i64..=8 {
            let disc = b * b - 4 * c;
            if disc == 0 {
                continue;
            }
            // irreducible over Q_5 iff disc is a non-square
            let cls = square_class(&LocalNumber::from_integer(&spec, disc, 8).unwrap()).unwrap();
            if !cls.is_trivial() {
                eligible.push((b, c));
            }
        }
    }
    assert!(!eligible.is_empty());
    let mut certified = 0usize;
    for &(b1, c1) in &eligible {
        let p: Polynomial<BigRational> = Polynomial::new(vec![rat(c1), rat(b1), rat(1)]);
        for b2 in -8i64..=8 {
            for c2 in -8i64..=8 {
                let q: Polynomial<BigRational> = Polynomial::new(vec![rat(c2), rat(b2), rat(1)]);
                if krasner_separates(&p, &q, &spec).unwrap() == KrasnerVerdict::CertifiedIsomorphic
                {
                    certified += 1;
                    let d1 = b1 * b1 - 4 * c1;
                    let d2 = b2 * b2 - 4 * c2;
                    assert_ne!(d2, 0, "certified q must be separable");
                    let s1 =
                        square_class(&LocalNumber::from_integer(&spec, d1, 8).unwrap()).unwrap();
                    let s2 =
                        square_class(&LocalNumber::from_integer(&spec, d2, 8).unwrap()).unwrap();
                    assert_eq!(s1, s2, "false certification at ({b1},{c1}) vs ({b2},{c2})");
                }
            }
        }
    }
    assert!(certified > 0, "the corpus contains certifiable pairs");
}

#[test]
fn hensel_output_valuation_invariant() {
    let spec = q5();
    let f: Polynomial<BigRational> = Polynomial::new(vec![rat(-6), rat(0), rat(1)]);
    let x0 = LocalNumber::from_integer(&spec, 1, 10).unwrap();
    let root = hyperlab_localnum::hensel_lift(&f, &x0, 5).unwrap();
    let fx = f.eval(&root.truncated_rational().unwrap()).unwrap();
    assert!(hyperlab_localnum::padic_norm_rational(&fx, 5).unwrap() >= ValExp::from_int(5));
}

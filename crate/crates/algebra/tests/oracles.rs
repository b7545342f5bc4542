//! Oracle cross-checks: every frozen expected value here was computed by an
//! independent route (cofactor expansion, brute-force factorization, direct
//! root enumeration) before being asserted against the production code.

use hyperlab_algebra::{
    poly_discriminant, poly_gcd, poly_resultant, rat, Coeff, FieldElement, FiniteFieldSpec,
    Polynomial,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn qpoly(cs: &[i64]) -> Polynomial<BigRational> {
    Polynomial::new(cs.iter().map(|&c| rat(c)).collect())
}

fn f3poly(cs: &[u64]) -> Polynomial<FieldElement> {
    let f3 = FiniteFieldSpec::prime(3).unwrap();
    Polynomial::new(cs.iter().map(|&c| f3.from_int(c)).collect())
}

// ---------------------------------------------------------------------------
// Independent resultant oracle: Sylvester matrix built from the textbook
// definition, determinant by recursive cofactor expansion.
// ---------------------------------------------------------------------------

fn sylvester(f: &[BigRational], g: &[BigRational]) -> Vec<Vec<BigRational>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![rat(0); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = f[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = g[n - k].clone();
        }
    }
    mat
}

fn cofactor_det(mat: &[Vec<BigRational>]) -> BigRational {
    let n = mat.len();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = rat(0);
    for col in 0..n {
        if Coeff::is_zero(&mat[0][col]) {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let term = &mat[0][col] * cofactor_det(&minor);
        acc = if col % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn resultant_oracle(f: &[i64], g: &[i64]) -> BigRational {
    let fv: Vec<BigRational> = f.iter().map(|&c| rat(c)).collect();
    let gv: Vec<BigRational> = g.iter().map(|&c| rat(c)).collect();
    cofactor_det(&sylvester(&fv, &gv))
}

#[test]
fn resultant_matches_cofactor_oracle() {
    // Res(X^2+1, X^2+X+1) = 1, frozen from the oracle
    assert_eq!(resultant_oracle(&[1, 0, 1], &[1, 1, 1]), rat(1));
    assert_eq!(poly_resultant(&qpoly(&[1, 0, 1]), &qpoly(&[1, 1, 1])).unwrap(), rat(1));

    // Res(X^2-5, X^2-30) = 625: roots ±sqrt(5) give (5-30)^2 by substitution
    assert_eq!(rat(5 - 30) * rat(5 - 30), rat(625));
    assert_eq!(resultant_oracle(&[-5, 0, 1], &[-30, 0, 1]), rat(625));
    assert_eq!(poly_resultant(&qpoly(&[-5, 0, 1]), &qpoly(&[-30, 0, 1])).unwrap(), rat(625));
}

#[test]
fn resultant_degree_one_is_evaluation() {
    // Res(X - a, g) = g(a)
    for a in -3i64..=3 {
        let f = qpoly(&[-a, 1]);
        let g = qpoly(&[2, -1, 0, 1]); // X^3 - X + 2
        let expected = g.eval(&rat(a)).unwrap();
        assert_eq!(poly_resultant(&f, &g).unwrap(), expected);
        assert_eq!(resultant_oracle(&[-a, 1], &[2, -1, 0, 1]), expected);
    }
}

// ---------------------------------------------------------------------------
// Discriminants against direct root enumeration
// ---------------------------------------------------------------------------

#[test]
fn discriminant_of_x2_minus_5() {
    // quadratic identity b^2 - 4c with b = 0, c = -5, cross-checked through
    // the resultant route inside poly_discriminant
    assert_eq!(poly_discriminant(&qpoly(&[-5, 0, 1])).unwrap(), rat(20));
}

#[test]
fn discriminant_of_x3_minus_x_by_root_enumeration() {
    // roots 0, 1, -1: prod of squared differences
    let roots = [rat(0), rat(1), rat(-1)];
    let mut prod = rat(1);
    for i in 0..3 {
        for j in i + 1..3 {
            let d = &roots[i] - &roots[j];
            prod *= &d * &d;
        }
    }
    assert_eq!(prod, rat(4));
    assert_eq!(poly_discriminant(&qpoly(&[0, -1, 0, 1])).unwrap(), rat(4));
}

// ---------------------------------------------------------------------------
// Separability detection via gcd(f, f'), with a brute-force factorization
// oracle over F_3.
// ---------------------------------------------------------------------------

/// All monic polynomials of the given degree over F_3.
fn monics_f3(deg: usize) -> Vec<Polynomial<FieldElement>> {
    let f3 = FiniteFieldSpec::prime(3).unwrap();
    let els = f3.elements();
    let mut out = Vec::new();
    let mut idx = vec![0usize; deg];
    loop {
        let mut coeffs: Vec<FieldElement> = idx.iter().map(|&i| els[i].clone()).collect();
        coeffs.push(f3.one());
        out.push(Polynomial::new(coeffs));
        let mut i = 0;
        loop {
            if i == deg {
                return out;
            }
            idx[i] += 1;
            if idx[i] < 3 {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Full factorization oracle by exhaustive trial division from low degree;
/// completely independent of the production irreducibility test. Returns
/// (factor, multiplicity) pairs.
fn factor_f3(f: &Polynomial<FieldElement>) -> Vec<(Polynomial<FieldElement>, usize)> {
    let mut rem = f.make_monic().unwrap();
    let mut out = Vec::new();
    let mut deg = 1usize;
    while rem.degree().map(|d| d >= 1).unwrap_or(false) {
        for cand in monics_f3(deg) {
            let mut mult = 0usize;
            while rem.rem(&cand).unwrap().is_zero() {
                rem = rem.divmod(&cand).unwrap().0;
                mult += 1;
            }
            if mult > 0 {
                // trial division from low degree up only ever peels off
                // irreducible factors
                out.push((cand, mult));
            }
        }
        deg += 1;
    }
    out
}

#[test]
fn x9_minus_x_is_squarefree_over_f3() {
    // X^9 - X has derivative -1 over F_3, so gcd(f, f') is constant. The
    // factorization oracle confirms: f is a product of distinct monic
    // irreducibles (three linear, three quadratic), hence squarefree.
    let mut coeffs = vec![0u64; 10];
    coeffs[1] = 2; // -X
    coeffs[9] = 1;
    let f = f3poly(&coeffs);
    let fp = f.derivative();
    assert_eq!(fp, f3poly(&[2])); // derivative is the constant -1

    let factors = factor_f3(&f);
    assert!(factors.iter().all(|(_, m)| *m == 1), "squarefree by the oracle");
    let degree_sum: usize = factors.iter().map(|(g, m)| g.degree().unwrap() * m).sum();
    assert_eq!(degree_sum, 9);
    assert_eq!(factors.iter().filter(|(g, _)| g.degree() == Some(1)).count(), 3);
    assert_eq!(factors.iter().filter(|(g, _)| g.degree() == Some(2)).count(), 3);

    let g = poly_gcd(&f, &fp).unwrap();
    assert_eq!(g.degree(), Some(0), "constant gcd certifies separability");
}

#[test]
fn repeated_structure_is_detected() {
    // (X^2+1)^3 = X^6 + 1 over F_3 has zero derivative; gcd(f, 0) = f keeps
    // full degree and flags inseparability.
    let f = f3poly(&[1, 0, 0, 0, 0, 0, 1]);
    let sq = f3poly(&[1, 0, 1]);
    assert_eq!(sq.mul(&sq).unwrap().mul(&sq).unwrap(), f);
    assert!(f.derivative().is_zero());
    let g = poly_gcd(&f, &f.derivative()).unwrap();
    assert_eq!(g.degree(), Some(6));
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

#[test]
fn gcd_divides_both_inputs_exhaustively_f3_deg_le_3() {
    let f3 = FiniteFieldSpec::prime(3).unwrap();
    let els = f3.elements();
    let mut monics: Vec<Polynomial<FieldElement>> = vec![Polynomial::constant(f3.one())];
    for deg in 1..=3usize {
        let mut idx = vec![0usize; deg];
        loop {
            let mut coeffs: Vec<FieldElement> = idx.iter().map(|&i| els[i].clone()).collect();
            coeffs.push(f3.one());
            monics.push(Polynomial::new(coeffs));
            let mut i = 0;
            loop {
                if i == deg {
                    break;
                }
                idx[i] += 1;
                if idx[i] < 3 {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == deg {
                break;
            }
        }
    }
    assert_eq!(monics.len(), 1 + 3 + 9 + 27);
    for f in &monics {
        for g in &monics {
            let d = poly_gcd(f, g).unwrap();
            assert!(f.rem(&d).unwrap().is_zero(), "gcd must divide f");
            assert!(g.rem(&d).unwrap().is_zero(), "gcd must divide g");
        }
    }
}

fn small_qpoly() -> impl Strategy<Value = Polynomial<BigRational>> {
    prop::collection::vec(-6i64..=6, 1..=4)
        .prop_map(|cs| Polynomial::new(cs.into_iter().map(rat).collect()))
}

fn small_f5poly() -> impl Strategy<Value = Polynomial<FieldElement>> {
    prop::collection::vec(0u64..5, 1..=4).prop_map(|cs| {
        let f5 = FiniteFieldSpec::prime(5).unwrap();
        Polynomial::new(cs.into_iter().map(|c| f5.from_int(c)).collect())
    })
}

proptest! {
    #[test]
    fn resultant_multiplicative_over_q(f in small_qpoly(), g in small_qpoly(), h in small_qpoly()) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let lhs = poly_resultant(&f, &g.mul(&h).unwrap()).unwrap();
        let rhs = poly_resultant(&f, &g).unwrap() * poly_resultant(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_multiplicative_over_f5(f in small_f5poly(), g in small_f5poly(), h in small_f5poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let lhs = poly_resultant(&f, &g.mul(&h).unwrap()).unwrap();
        let rhs = poly_resultant(&f, &g).unwrap()
            .checked_mul(&poly_resultant(&f, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

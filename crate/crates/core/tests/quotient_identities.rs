//! Quotient matrices against independent determinant evaluation, the
//! reference closed forms, and the full spectra of the family graphs.

use specbound::printed;
use specbound::quotient::{
    charpoly, quotient_g, quotient_g_p0, quotient_h, quotient_h_s0, verify_eigvec_families,
    FamilyKind, QuotientMatrix,
};
use specbound::{spectra, FamilyParams, IntPolynomial, MatrixKind, Rational};

fn fp(p: usize, r: usize, s: usize) -> FamilyParams {
    FamilyParams::new(p, r, s)
}

/// `det(x I - M)` by fraction-free Bareiss elimination.
fn det_shifted(m: &[Vec<i64>], x: i128) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { x } else { 0 } - m[i][j] as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Every quotient with parameters up to `max`, in each shape.
fn grid(max: usize) -> Vec<QuotientMatrix> {
    let mut out = Vec::new();
    for p in 0..=max {
        for r in 0..=max {
            for s in 0..=max {
                let params = fp(p, r, s);
                for build in [quotient_h, quotient_h_s0, quotient_g, quotient_g_p0] {
                    if let Ok(m) = build(params) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn charpoly_agrees_with_bareiss_determinants() {
    let all = grid(6);
    assert_eq!(all.len(), 126 + 36 + 126 + 36);
    for m in &all {
        let f = charpoly(m);
        assert_eq!(f.degree(), m.order());
        assert!(f.is_monic());
        // degree + 1 points pin the polynomial down
        for x in -3..=(m.order() as i128) {
            assert_eq!(f.eval_int(x), det_shifted(m.entries(), x), "{} {} at {x}", m.family(), m.params());
        }
    }
}

#[test]
fn charpoly_vanishes_at_quotient_eigenvalues() {
    for m in grid(5) {
        let f = charpoly(&m);
        let scale = m.row_sums().into_iter().max().unwrap() as f64;
        for lambda in m.eigenvalues().unwrap() {
            // |f(lambda)| is bounded by |f'| times the eigenvalue error
            assert!(f.eval_f64(lambda).abs() < 1e-6 * scale.powi(m.order() as i32), "{} {}", m.family(), m.params());
        }
    }
}

#[test]
fn reference_quartics_match() {
    for r in 1..=6 {
        for s in 1..=6 {
            let f = charpoly(&quotient_g_p0(fp(0, r, s)).unwrap());
            assert_eq!(f, printed::g_p0_quartic(r, s));
            assert_eq!(f.eval_int(s as i128 + 1), printed::g_p0_value_at_s_plus_1(r, s));
        }
    }
    for p in 1..=6 {
        for r in 1..=6 {
            let f = charpoly(&quotient_h_s0(fp(p, r, 0)).unwrap());
            assert_eq!(f, printed::h_s0_quartic(p, r));
            assert_eq!(f.eval_int(p as i128), printed::h_s0_value_at_p(p, r));
        }
    }
}

#[test]
fn reference_g_quintic_matches() {
    for p in 1..=6 {
        for s in 1..=6 {
            for r in s..=6 {
                assert_eq!(charpoly(&quotient_g(fp(p, r, s)).unwrap()), printed::g_quintic(p, r, s));
            }
        }
    }
}

#[test]
fn reference_h_quintic_agrees_only_at_p_two() {
    for p in 1..=6 {
        for s in 1..=6 {
            for r in s..=6 {
                let f = charpoly(&quotient_h(fp(p, r, s)).unwrap());
                // the x^4 coefficient is minus the trace
                assert_eq!(f.coeff(4), -((2 * p + r + s + 4) as i128));
                assert_eq!(f == printed::h_quintic(p, r, s), p == 2, "({p},{r},{s})");
            }
        }
    }
}

#[test]
fn h_quintic_sign_pattern_at_zero() {
    // H(p,r,s) is bipartite, so 0 is a simple Q-eigenvalue and a root of f.
    for p in 1..=6 {
        for s in 1..=6 {
            for r in s..=6 {
                let m = quotient_h(fp(p, r, s)).unwrap();
                let f = charpoly(&m);
                assert_eq!(f.coeff(0), 0);
                assert!(f.eval_at(Rational::new(-1, 2).unwrap()).signum().is_lt());
                let ev = m.eigenvalues().unwrap();
                let next = ev[ev.len() - 2];
                assert!(next > 1e-3);
                let x = Rational::new((next * 500.0).floor() as i128, 1000).unwrap();
                assert!(f.eval_at(x).signum().is_gt(), "({p},{r},{s})");
            }
        }
    }
}

#[test]
fn reference_h_factorization_at_p_plus_s() {
    let mut agree = 0;
    for p in 1..=6 {
        for s in 1..=6 {
            for k in 0..=(6 - s) {
                let f = charpoly(&quotient_h(fp(p, s + k, s)).unwrap());
                let computed = f.eval_int((p + s) as i128);
                assert_eq!(computed, det_shifted(quotient_h(fp(p, s + k, s)).unwrap().entries(), (p + s) as i128));
                agree += usize::from(computed == printed::h_value_at_p_plus_s(p, s, k));
            }
        }
    }
    // the printed factorization is not an identity in (p, s, k)
    assert!(agree < 126);
}

#[test]
fn sign_between_the_two_largest_roots_is_negative() {
    for m in grid(6) {
        let f = charpoly(&m);
        let ev = m.eigenvalues().unwrap();
        if ev[0] - ev[1] < 1e-6 {
            continue;
        }
        let mid = (ev[0] + ev[1]) / 2.0;
        let y = Rational::new((mid * 1e6).round() as i128, 1_000_000).unwrap();
        assert!(y.to_f64() > ev[1] && y.to_f64() < ev[0]);
        assert!(f.eval_at(y).signum().is_lt(), "{} {}", m.family(), m.params());
    }
}

#[test]
fn spectrum_union_over_families() {
    for p in 0..=5 {
        for r in 0..=5 {
            for s in 0..=5 {
                let params = fp(p, r, s);
                for kind in [FamilyKind::H, FamilyKind::G] {
                    let Ok(g) = kind.build(params) else { continue };
                    if QuotientMatrix::for_graph(kind, params).is_err() {
                        continue;
                    }
                    let rep = verify_eigvec_families(&g, params, kind, Some(1e-8)).unwrap();
                    assert!(rep.holds(), "{kind}{params}: {rep:?}");
                }
            }
        }
    }
}

#[test]
fn quotient_is_equitable_for_the_family_graph() {
    for m in grid(4) {
        let g = m.family().graph_family().build(m.params()).unwrap();
        assert!(m.is_equitable_for(&spectra::signless_laplacian(&g)));
    }
}

#[test]
fn eigenvector_multiplicities_on_small_instances() {
    let g = FamilyKind::H.build(fp(3, 2, 1)).unwrap();
    let sp = spectra::graph_spectrum(&g, MatrixKind::Q, None).unwrap();
    assert!(sp.multiplicity(2.0) >= 2);
    assert!(sp.multiplicity(1.0) >= 1);

    let p = fp(1, 1, 0);
    let rep = verify_eigvec_families(&FamilyKind::H.build(p).unwrap(), p, FamilyKind::H, None).unwrap();
    assert_eq!(rep.quotient_eigenvalues.len(), 4);
    assert_eq!((rep.twos_expected, rep.ones_expected), (0, 0));
}

#[test]
fn ascii_golden_forms() {
    let f = charpoly(&quotient_g_p0(fp(0, 1, 1)).unwrap());
    assert_eq!(f.to_ascii(), "0 + -4*x + 10*x^2 + -6*x^3 + 1*x^4");
    let id = IntPolynomial::linear_power(1, 4);
    assert_eq!(id.to_ascii(), "1 + -4*x + 6*x^2 + -4*x^3 + 1*x^4");
}

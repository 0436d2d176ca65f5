//! Equitable-partition quotient matrices of the two-hub families.
//!
//! The vertex classes are `{u}`, `{v}`, the middles, the pendants of `u`
//! and the pendants of `v` (empty classes are dropped). Entry `(i, j)` of
//! the quotient is the signless-Laplacian weight a vertex of class `i`
//! sends into class `j`, so every quotient eigenvalue is a Q-eigenvalue of
//! the graph. The remaining Q-eigenvalues come from difference vectors
//! `e_a - e_b` inside the middle class (eigenvalue 2) and inside each
//! pendant class (eigenvalue 1).

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, FamilyParams};
use crate::graph::Graph;
use crate::polynomial::IntPolynomial;
use crate::spectra::{self, SymMatrix};

/// Parameter ceiling that keeps every charpoly coefficient inside `i64`.
pub const MAX_PARAM: usize = 10_000;

/// Which graph family a graph was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    H,
    G,
}

impl FamilyKind {
    pub fn build(self, params: FamilyParams) -> Result<Graph> {
        match self {
            FamilyKind::H => families::family_h(params),
            FamilyKind::G => families::family_g(params),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::H => "H",
            FamilyKind::G => "G",
        })
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(FamilyKind::H),
            "G" | "g" => Ok(FamilyKind::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Shape of a quotient matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuotientFamily {
    /// `H(p,r,s)` with `p, r, s >= 1`; order 5.
    H,
    /// `H(p,r,0)` with `p, r >= 1`; order 4.
    HS0,
    /// `G(p,r,s)` with `p, r, s >= 1`; order 5.
    G,
    /// `G(0,r,s)` with `r, s >= 1`; order 4.
    GP0,
}

impl QuotientFamily {
    pub fn graph_family(self) -> FamilyKind {
        match self {
            QuotientFamily::H | QuotientFamily::HS0 => FamilyKind::H,
            QuotientFamily::G | QuotientFamily::GP0 => FamilyKind::G,
        }
    }

    pub fn order(self) -> usize {
        match self {
            QuotientFamily::H | QuotientFamily::G => 5,
            QuotientFamily::HS0 | QuotientFamily::GP0 => 4,
        }
    }
}

impl fmt::Display for QuotientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientFamily::H => "H",
            QuotientFamily::HS0 => "H-s0",
            QuotientFamily::G => "G",
            QuotientFamily::GP0 => "G-p0",
        })
    }
}

impl std::str::FromStr for QuotientFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(QuotientFamily::H),
            "H-s0" | "h-s0" | "Hs0" => Ok(QuotientFamily::HS0),
            "G" | "g" => Ok(QuotientFamily::G),
            "G-p0" | "g-p0" | "Gp0" => Ok(QuotientFamily::GP0),
            other => Err(Error::Parse(format!("unknown quotient family {other:?}"))),
        }
    }
}

/// Small integer quotient matrix together with the parameters it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    family: QuotientFamily,
    params: FamilyParams,
    entries: Vec<Vec<i64>>,
}

/// `H(p,r,s)` quotient; requires `p >= 1` and `r >= s >= 1`.
pub fn quotient_h(params: FamilyParams) -> Result<QuotientMatrix> {
    require(params.p >= 1 && params.s >= 1 && params.r >= params.s, "p >= 1, r >= s >= 1", params)?;
    QuotientMatrix::build(QuotientFamily::H, params)
}

/// `H(p,r,0)` quotient; requires `p >= 1`, `r >= 1`, `s = 0`.
pub fn quotient_h_s0(params: FamilyParams) -> Result<QuotientMatrix> {
    require(params.p >= 1 && params.r >= 1 && params.s == 0, "p >= 1, r >= 1, s = 0", params)?;
    QuotientMatrix::build(QuotientFamily::HS0, params)
}

/// `G(p,r,s)` quotient; requires `p >= 1` and `r >= s >= 1`.
pub fn quotient_g(params: FamilyParams) -> Result<QuotientMatrix> {
    require(params.p >= 1 && params.s >= 1 && params.r >= params.s, "p >= 1, r >= s >= 1", params)?;
    QuotientMatrix::build(QuotientFamily::G, params)
}

/// `G(0,r,s)` quotient; requires `p = 0`, `r >= 1`, `s >= 1`.
pub fn quotient_g_p0(params: FamilyParams) -> Result<QuotientMatrix> {
    require(params.p == 0 && params.r >= 1 && params.s >= 1, "p = 0, r >= 1, s >= 1", params)?;
    QuotientMatrix::build(QuotientFamily::GP0, params)
}

fn require(ok: bool, range: &str, params: FamilyParams) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::param(format!("quotient requires {range}, got {params}")))
    }
}

impl QuotientMatrix {
    /// Builds the quotient for any parameters where the shape is defined,
    /// without the `r >= s` ordering the named constructors ask for.
    pub fn build(family: QuotientFamily, params: FamilyParams) -> Result<Self> {
        let FamilyParams { p, r, s } = params;
        if p.max(r).max(s) > MAX_PARAM {
            return Err(Error::param(format!("parameters above {MAX_PARAM}: {params}")));
        }
        let shape_ok = match family {
            QuotientFamily::H | QuotientFamily::G => p >= 1 && r >= 1 && s >= 1,
            QuotientFamily::HS0 => p >= 1 && r >= 1 && s == 0,
            QuotientFamily::GP0 => p == 0 && r >= 1 && s >= 1,
        };
        if !shape_ok {
            return Err(Error::param(format!("no {family} quotient for {params}")));
        }
        let (p, r, s) = (p as i64, r as i64, s as i64);
        let entries = match family {
            QuotientFamily::H => vec![
                vec![p + r, 0, p, r, 0],
                vec![0, p + s, p, 0, s],
                vec![1, 1, 2, 0, 0],
                vec![1, 0, 0, 1, 0],
                vec![0, 1, 0, 0, 1],
            ],
            QuotientFamily::HS0 => vec![
                vec![p + r, 0, p, r],
                vec![0, p, p, 0],
                vec![1, 1, 2, 0],
                vec![1, 0, 0, 1],
            ],
            QuotientFamily::G => vec![
                vec![p + r + 1, 1, p, r, 0],
                vec![1, p + s + 1, p, 0, s],
                vec![1, 1, 2, 0, 0],
                vec![1, 0, 0, 1, 0],
                vec![0, 1, 0, 0, 1],
            ],
            QuotientFamily::GP0 => vec![
                vec![r + 1, 1, r, 0],
                vec![1, s + 1, 0, s],
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
            ],
        };
        Ok(QuotientMatrix { family, params, entries })
    }

    /// Quotient matching a family graph, choosing the shape from which
    /// classes are non-empty.
    pub fn for_graph(kind: FamilyKind, params: FamilyParams) -> Result<Self> {
        let family = match kind {
            FamilyKind::H if params.s == 0 => QuotientFamily::HS0,
            FamilyKind::H => QuotientFamily::H,
            FamilyKind::G if params.p == 0 => QuotientFamily::GP0,
            FamilyKind::G => QuotientFamily::G,
        };
        QuotientMatrix::build(family, params)
    }

    pub fn family(&self) -> QuotientFamily {
        self.family
    }

    pub fn params(&self) -> FamilyParams {
        self.params
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Vertex ranges of the classes, in quotient row order.
    pub fn classes(&self) -> Vec<Range<usize>> {
        let pr = self.params;
        let mut out = vec![0..1, 1..2];
        if self.family != QuotientFamily::GP0 {
            out.push(pr.middles());
        }
        out.push(pr.u_pendants());
        if self.family != QuotientFamily::HS0 {
            out.push(pr.v_pendants());
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().iter().map(|c| c.len()).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    /// Checks that `q` (the signless Laplacian of the family graph) sends
    /// exactly `entries[i][j]` weight from every vertex of class `i` into
    /// class `j`.
    pub fn is_equitable_for(&self, q: &SymMatrix) -> bool {
        let classes = self.classes();
        if q.order() != classes.last().map(|c| c.end).unwrap_or(0) {
            return false;
        }
        classes.iter().enumerate().all(|(i, ci)| {
            ci.clone().all(|vtx| {
                classes.iter().enumerate().all(|(j, cj)| {
                    let w: f64 = cj.clone().map(|x| q.get(vtx, x)).sum();
                    w == self.entries[i][j] as f64
                })
            })
        })
    }

    /// Similar symmetric matrix `N^{1/2} M N^{-1/2}`, `N` the class sizes.
    pub fn symmetrized(&self) -> SymMatrix {
        let sizes: Vec<f64> = self.class_sizes().iter().map(|&n| n as f64).collect();
        let k = self.order();
        let scaled = |i: usize, j: usize| (sizes[i] / sizes[j]).sqrt() * self.entries[i][j] as f64;
        // Symmetric up to rounding; averaging makes it exact for from_rows.
        let rows: Vec<Vec<f64>> = (0..k)
            .map(|i| (0..k).map(|j| 0.5 * (scaled(i, j) + scaled(j, i))).collect())
            .collect();
        SymMatrix::from_rows(&rows).expect("quotient symmetrization is square")
    }

    /// Numerical eigenvalues, sorted non-increasing.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(spectra::spectrum(&self.symmetrized(), None)?.values().to_vec())
    }
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

/// `det(xI - M)` by the Faddeev-LeVerrier recurrence over exact integers.
pub fn charpoly(m: &QuotientMatrix) -> IntPolynomial {
    charpoly_of(m.entries())
}

/// Faddeev-LeVerrier on any square integer matrix.
pub fn charpoly_of(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    // coeffs[i] is the coefficient of x^i; coeffs[n] = 1.
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * mk[l][j]).sum();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        mk = next;
        // c_{n-k} = -tr(A M_k) / k
        let tr: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * mk[l][i]).sum::<i128>()).sum();
        debug_assert_eq!(tr % k as i128, 0, "Faddeev-LeVerrier trace must divide exactly");
        coeffs[n - k] = -tr / k as i128;
    }
    IntPolynomial::new(coeffs)
}

/// Outcome of checking the difference-vector eigenvectors and the
/// spectrum-union identity on one family graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub family: QuotientFamily,
    pub params: FamilyParams,
    pub quotient_eigenvalues: Vec<f64>,
    /// Difference vectors confirmed as eigenvectors for eigenvalue 2.
    pub twos_verified: usize,
    /// Difference vectors confirmed as eigenvectors for eigenvalue 1.
    pub ones_verified: usize,
    pub twos_expected: usize,
    pub ones_expected: usize,
    pub max_residual: f64,
    /// Quotient eigenvalues plus the fixed ones, sorted non-increasing.
    pub predicted: Vec<f64>,
    /// Full Q spectrum, sorted non-increasing.
    pub actual: Vec<f64>,
    pub max_mismatch: f64,
    pub tol: f64,
}

impl MultiplicityReport {
    pub fn holds(&self) -> bool {
        self.twos_verified == self.twos_expected
            && self.ones_verified == self.ones_expected
            && self.max_residual <= self.tol
            && self.predicted.len() == self.actual.len()
            && self.max_mismatch <= self.tol
    }
}

/// Verifies the eigenvector families and the multiset identity
/// `spec Q(g) = spec(quotient) + {2}^(p-1) + {1}^(pendant classes)`
/// for a graph built by [`FamilyKind::build`] with `params`.
pub fn verify_eigvec_families(
    g: &Graph,
    params: FamilyParams,
    kind: FamilyKind,
    tol: Option<f64>,
) -> Result<MultiplicityReport> {
    let expected = kind.build(params)?;
    if *g != expected {
        return Err(Error::param(format!(
            "graph does not match {kind}{params} under the fixed labeling"
        )));
    }
    let quotient = QuotientMatrix::for_graph(kind, params)?;
    let q = spectra::signless_laplacian(g);
    let tol = tol.unwrap_or_else(|| q.default_tol());

    let mut max_residual: f64 = 0.0;
    let mut count_within = |class: Range<usize>, lambda: f64| -> usize {
        let mut ok = 0;
        let first = class.start;
        for other in class.skip(1) {
            let mut x = vec![0.0; g.order()];
            x[first] = 1.0;
            x[other] = -1.0;
            let qx = q.mul_vec(&x);
            let res = qx
                .iter()
                .zip(&x)
                .map(|(a, b)| (a - lambda * b).powi(2))
                .sum::<f64>()
                .sqrt();
            max_residual = max_residual.max(res);
            if res <= tol {
                ok += 1;
            }
        }
        ok
    };
    let twos_verified = count_within(params.middles(), 2.0);
    let ones_verified =
        count_within(params.u_pendants(), 1.0) + count_within(params.v_pendants(), 1.0);
    let twos_expected = params.p.saturating_sub(1);
    let ones_expected = params.r.saturating_sub(1) + params.s.saturating_sub(1);

    let quotient_eigenvalues = quotient.eigenvalues()?;
    let mut predicted = quotient_eigenvalues.clone();
    predicted.extend(std::iter::repeat_n(2.0, twos_expected));
    predicted.extend(std::iter::repeat_n(1.0, ones_expected));
    predicted.sort_by(|a, b| b.total_cmp(a));

    let actual = spectra::spectrum(&q, Some(tol))?.values().to_vec();
    let max_mismatch = if predicted.len() == actual.len() {
        predicted
            .iter()
            .zip(&actual)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };

    Ok(MultiplicityReport {
        family: quotient.family(),
        params,
        quotient_eigenvalues,
        twos_verified,
        ones_verified,
        twos_expected,
        ones_expected,
        max_residual,
        predicted,
        actual,
        max_mismatch,
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(p: usize, r: usize, s: usize) -> FamilyParams {
        FamilyParams::new(p, r, s)
    }

    #[test]
    fn h_matrix_literal() {
        let m = quotient_h(p(1, 1, 1)).unwrap();
        assert_eq!(
            m.entries(),
            &[
                vec![2, 0, 1, 1, 0],
                vec![0, 2, 1, 0, 1],
                vec![1, 1, 2, 0, 0],
                vec![1, 0, 0, 1, 0],
                vec![0, 1, 0, 0, 1],
            ]
        );
        assert!(quotient_h(p(0, 1, 1)).is_err());
        assert!(quotient_h(p(1, 1, 2)).is_err());
    }

    #[test]
    fn h_s0_matrix_literal() {
        let m = quotient_h_s0(p(1, 1, 0)).unwrap();
        assert_eq!(
            m.entries(),
            &[vec![2, 0, 1, 1], vec![0, 1, 1, 0], vec![1, 1, 2, 0], vec![1, 0, 0, 1]]
        );
        assert!(quotient_h_s0(p(0, 1, 0)).is_err());
        assert!(quotient_h_s0(p(1, 1, 1)).is_err());
    }

    #[test]
    fn g_matrix_literals() {
        let m = quotient_g(p(1, 1, 1)).unwrap();
        assert_eq!(
            m.entries(),
            &[
                vec![3, 1, 1, 1, 0],
                vec![1, 3, 1, 0, 1],
                vec![1, 1, 2, 0, 0],
                vec![1, 0, 0, 1, 0],
                vec![0, 1, 0, 0, 1],
            ]
        );
        let m = quotient_g_p0(p(0, 1, 1)).unwrap();
        assert_eq!(
            m.entries(),
            &[vec![2, 1, 1, 0], vec![1, 2, 0, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
        );
        assert!(quotient_g_p0(p(1, 1, 1)).is_err());
        assert!(quotient_g(p(1, 0, 0)).is_err());
    }

    #[test]
    fn rejects_oversized_parameters() {
        assert!(quotient_h(p(MAX_PARAM + 1, 1, 1)).is_err());
    }

    #[test]
    fn row_sums_match_graph_rows() {
        let params = p(2, 2, 1);
        let m = quotient_h(params).unwrap();
        let q = spectra::signless_laplacian(&families::family_h(params).unwrap());
        for (class, sum) in m.classes().iter().zip(m.row_sums()) {
            for v in class.clone() {
                assert_eq!(q.row(v).iter().sum::<f64>(), sum as f64);
            }
        }
        assert!(m.is_equitable_for(&q));
    }

    #[test]
    fn identity_charpoly() {
        let id: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| (i == j) as i64).collect()).collect();
        assert_eq!(charpoly_of(&id), IntPolynomial::linear_power(1, 4));
    }

    #[test]
    fn charpoly_is_monic_of_full_degree() {
        let f = charpoly(&quotient_g(p(3, 2, 1)).unwrap());
        assert!(f.is_monic());
        assert_eq!(f.degree(), 5);
    }

    #[test]
    fn triangle_charpoly() {
        // Q(K_3) has spectrum (4, 1, 1): (x-4)(x-1)^2 = x^3 - 6x^2 + 9x - 4
        let q = vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]];
        assert_eq!(charpoly_of(&q).coeffs(), &[-4, 9, -6, 1]);
    }

    #[test]
    fn path_on_four_has_no_extra_eigenvalues() {
        let params = p(1, 1, 0);
        let g = families::family_h(params).unwrap();
        let rep = verify_eigvec_families(&g, params, FamilyKind::H, None).unwrap();
        assert_eq!(rep.quotient_eigenvalues.len(), 4);
        assert_eq!(rep.twos_expected + rep.ones_expected, 0);
        assert!(rep.holds(), "{rep:?}");
    }

    #[test]
    fn mismatched_graph_is_rejected() {
        let g = families::family_h(p(2, 1, 1)).unwrap();
        assert!(verify_eigvec_families(&g, p(2, 1, 1), FamilyKind::G, None).is_err());
        assert!(verify_eigvec_families(&g, p(1, 1, 1), FamilyKind::H, None).is_err());
    }
}

//! Inequality checks on single graphs and on family instances.
//!
//! Every check produces a [`BoundReport`] comparing a spectral quantity
//! (`lhs`) with a degree-based threshold (`rhs`). Upper bounds are written
//! with the roles swapped so that every report reads "lhs vs rhs" with the
//! claim stated by its [`Expectation`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, FamilyParams};
use crate::format;
use crate::graph::Graph;
use crate::polynomial::{IntPolynomial, Rational};
use crate::quotient::{self, FamilyKind, QuotientFamily, QuotientMatrix};
use crate::spectra::{self, MatrixKind, Spectrum, SymMatrix};

/// Absolute tolerance on `lhs - rhs` for equality detection.
pub const EQUALITY_TOL: f64 = 1e-7;
/// Gaps between the tolerance and this value are flagged for review.
pub const SUSPICIOUS_GAP: f64 = 1e-4;

pub const CSV_HEADER: &str = "kind,k,n,lhs,rhs,verdict,witness";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Strict,
    Equality,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Strict => "strict",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
        })
    }
}

/// The relation a check claims between `lhs` and `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    AtLeast,
    Greater,
    Equal,
}

/// Structural tag for graphs attaining a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EqualityClass {
    Star,
    K3,
    P4,
    Other,
}

impl fmt::Display for EqualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualityClass::Star => "Star",
            EqualityClass::K3 => "K3",
            EqualityClass::P4 => "P4",
            EqualityClass::Other => "Other",
        })
    }
}

/// Star, triangle or four-vertex path, decided from degrees and edge count.
pub fn structural_class(g: &Graph) -> EqualityClass {
    let n = g.order();
    let m = g.edge_count();
    let ds = g.degree_sequence();
    let d = ds.as_slice();
    if n >= 2 && m == n - 1 && d[0] == n - 1 && d[1..].iter().all(|&x| x == 1) {
        EqualityClass::Star
    } else if n == 3 && m == 3 {
        EqualityClass::K3
    } else if n == 4 && m == 3 && d == [2, 2, 1, 1] && g.is_connected() {
        EqualityClass::P4
    } else {
        EqualityClass::Other
    }
}

/// Identifier of a family proposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropositionId {
    /// `H(p,r,s)`, `p >= 1`, `r >= s >= 1`: `q2 > d2`.
    P3,
    /// `H(p,r,0)`, `p, r >= 1`: `q2 >= d2`, equality only for `P_4`.
    P4,
    /// `G(0,r,s)`, `r, s >= 1`: `q1 + q2 > d1 + d2 + 1`.
    P5,
    /// `G(1,r,r)`: `q1 > d1 + 3/2` and `q2 > d2 - 1/2`.
    P6i,
    /// `G(p,r,r)`, `p >= 2`: `q1 > d1 + 2`.
    P6ii,
    /// `G(p,r,s)`, `r >= s + 3`: `q2 > d2`.
    P6iii,
    /// `G(p,r,s)`, `r` in `{s+1, s+2}`: `q1 > d1 + 1 + p/n`, `q2 > d2 - p/n`.
    P6iv,
}

impl PropositionId {
    pub const ALL: [PropositionId; 7] = [
        PropositionId::P3,
        PropositionId::P4,
        PropositionId::P5,
        PropositionId::P6i,
        PropositionId::P6ii,
        PropositionId::P6iii,
        PropositionId::P6iv,
    ];

    pub fn family(self) -> FamilyKind {
        match self {
            PropositionId::P3 | PropositionId::P4 => FamilyKind::H,
            _ => FamilyKind::G,
        }
    }

    /// `Ok` when `params` satisfy the hypothesis, otherwise a
    /// [`Error::HypothesisViolation`] naming the range.
    pub fn check_hypothesis(self, params: FamilyParams) -> Result<()> {
        let FamilyParams { p, r, s } = params;
        let (ok, range) = match self {
            PropositionId::P3 => (p >= 1 && r >= s && s >= 1, "p >= 1, r >= s >= 1"),
            PropositionId::P4 => (p >= 1 && r >= 1 && s == 0, "p >= 1, r >= 1, s = 0"),
            PropositionId::P5 => (p == 0 && r >= 1 && s >= 1, "p = 0, r >= 1, s >= 1"),
            PropositionId::P6i => (p == 1 && r == s && s >= 1, "p = 1, r = s >= 1"),
            PropositionId::P6ii => (p >= 2 && r == s && s >= 1, "p >= 2, r = s >= 1"),
            PropositionId::P6iii => (p >= 1 && s >= 1 && r >= s + 3, "p >= 1, s >= 1, r >= s + 3"),
            PropositionId::P6iv => (
                p >= 1 && s >= 1 && (r == s + 1 || r == s + 2),
                "p >= 1, s >= 1, r in {s+1, s+2}",
            ),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::HypothesisViolation(format!("{self} requires {range}, got {params}")))
        }
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PropositionId::P3 => "P3",
            PropositionId::P4 => "P4",
            PropositionId::P5 => "P5",
            PropositionId::P6i => "P6i",
            PropositionId::P6ii => "P6ii",
            PropositionId::P6iii => "P6iii",
            PropositionId::P6iv => "P6iv",
        })
    }
}

impl std::str::FromStr for PropositionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropositionId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown proposition {s:?}")))
    }
}

/// What was checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum BoundKind {
    /// Sum of the `k` largest eigenvalues against `1 + d_1 + ... + d_k`.
    GroneSum { matrix: MatrixKind },
    LemmaQ1,
    LemmaQ2,
    Schur,
    Proposition { id: PropositionId, claim: String },
    SnPlusBand { band: String },
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::GroneSum { matrix } => write!(f, "grone-{matrix}"),
            BoundKind::LemmaQ1 => f.write_str("lemma-q1"),
            BoundKind::LemmaQ2 => f.write_str("lemma-q2"),
            BoundKind::Schur => f.write_str("schur"),
            BoundKind::Proposition { id, claim } => write!(f, "{id}[{claim}]"),
            BoundKind::SnPlusBand { band } => write!(f, "snplus[{band}]"),
        }
    }
}

/// The object a report is about.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Graph { graph6: String },
    Family { family: FamilyKind, params: FamilyParams },
    SnPlus { n: usize },
    Matrix { order: usize },
}

impl Witness {
    pub fn of_graph(g: &Graph) -> Self {
        let graph6 = format::to_graph6(g).unwrap_or_else(|_| format::to_json(g));
        Witness::Graph { graph6 }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Graph { graph6 } => f.write_str(graph6),
            Witness::Family { family, params } => write!(f, "{family}{params}"),
            Witness::SnPlus { n } => write!(f, "S{n}+"),
            Witness::Matrix { order } => write!(f, "matrix[{order}]"),
        }
    }
}

/// One inequality evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub k: usize,
    pub n: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub verdict: Verdict,
    pub expect: Expectation,
    pub witness: Witness,
    pub tol: f64,
    /// `|lhs - rhs|` fell between the tolerance and [`SUSPICIOUS_GAP`].
    pub suspicious: bool,
    /// Structural tag of the witness graph, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<EqualityClass>,
}

impl BoundReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        kind: BoundKind,
        k: usize,
        n: usize,
        lhs: f64,
        rhs: f64,
        expect: Expectation,
        witness: Witness,
        tol: f64,
    ) -> Self {
        let gap = lhs - rhs;
        let verdict = if gap < -tol {
            Verdict::Violated
        } else if gap.abs() <= tol {
            Verdict::Equality
        } else {
            Verdict::Strict
        };
        BoundReport {
            kind,
            k,
            n,
            lhs,
            rhs,
            verdict,
            expect,
            witness,
            tol,
            suspicious: gap.abs() > tol && gap.abs() < SUSPICIOUS_GAP,
            class: None,
        }
    }

    fn with_class(mut self, class: EqualityClass) -> Self {
        self.class = Some(class);
        self
    }

    pub fn margin(&self) -> f64 {
        self.lhs - self.rhs
    }

    /// Whether the claimed relation holds under the tolerance.
    pub fn holds(&self) -> bool {
        match self.expect {
            Expectation::AtLeast => self.verdict != Verdict::Violated,
            Expectation::Greater => self.verdict == Verdict::Strict,
            Expectation::Equal => self.verdict == Verdict::Equality,
        }
    }

    /// Row matching [`CSV_HEADER`]; text fields are quoted when needed.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.12},{:.12},{},{}",
            csv_field(&self.kind.to_string()),
            self.k,
            self.n,
            self.lhs,
            self.rhs,
            self.verdict,
            csv_field(&self.witness.to_string())
        )
    }
}

/// RFC 4180 quoting for fields containing separators or quotes.
pub fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

/// Evaluates checks with a fixed tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checker {
    pub tol: f64,
}

impl Default for Checker {
    fn default() -> Self {
        Checker { tol: EQUALITY_TOL }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected("inequality assumes a connected graph".into()))
    }
}

fn grone_matrix(kind: MatrixKind) -> Result<MatrixKind> {
    match kind {
        MatrixKind::L | MatrixKind::Q => Ok(kind),
        MatrixKind::A => Err(Error::param("degree-sum bounds are stated for L and Q only")),
    }
}

impl Checker {
    pub fn new(tol: f64) -> Self {
        Checker { tol }
    }

    /// `lambda_1 + ... + lambda_k` of L or Q against `1 + d_1 + ... + d_k`.
    pub fn check_grone_sum(&self, g: &Graph, k: usize, kind: MatrixKind) -> Result<BoundReport> {
        let kind = grone_matrix(kind)?;
        require_connected(g)?;
        let sp = spectra::graph_spectrum(g, kind, None)?;
        self.grone_from_spectrum(g, &sp, k, kind)
    }

    /// Same as [`Checker::check_grone_sum`] on a precomputed spectrum.
    pub fn grone_from_spectrum(
        &self,
        g: &Graph,
        sp: &Spectrum,
        k: usize,
        kind: MatrixKind,
    ) -> Result<BoundReport> {
        let lhs = sp.kyfan_sum(k)?;
        let rhs = 1.0 + g.degree_sequence().top_sum(k) as f64;
        Ok(BoundReport::new(
            BoundKind::GroneSum { matrix: kind },
            k,
            g.order(),
            lhs,
            rhs,
            Expectation::AtLeast,
            Witness::of_graph(g),
            self.tol,
        )
        .with_class(structural_class(g)))
    }

    /// `q1 >= d1 + 1`; `class` records whether the graph is a star.
    pub fn check_lemma_q1(&self, g: &Graph) -> Result<BoundReport> {
        require_connected(g)?;
        let sp = spectra::graph_spectrum(g, MatrixKind::Q, None)?;
        let d1 = g.degree_sequence().d1();
        Ok(BoundReport::new(
            BoundKind::LemmaQ1,
            1,
            g.order(),
            sp.largest(),
            d1 as f64 + 1.0,
            Expectation::AtLeast,
            Witness::of_graph(g),
            self.tol,
        )
        .with_class(structural_class(g)))
    }

    /// `q2 >= d2 - 1`.
    pub fn check_lemma_q2(&self, g: &Graph) -> Result<BoundReport> {
        if g.order() < 2 {
            return Err(Error::param("q2 needs at least two vertices"));
        }
        let sp = spectra::graph_spectrum(g, MatrixKind::Q, None)?;
        let d2 = g.degree_sequence().d2();
        Ok(BoundReport::new(
            BoundKind::LemmaQ2,
            2,
            g.order(),
            sp.values()[1],
            d2 as f64 - 1.0,
            Expectation::AtLeast,
            Witness::of_graph(g),
            self.tol,
        )
        .with_class(structural_class(g)))
    }

    /// Tags an equality case of [`Checker::check_grone_sum`]. Errors with
    /// [`Error::InvalidState`] when the bound is not attained.
    pub fn classify_equality(&self, g: &Graph, k: usize, kind: MatrixKind) -> Result<EqualityClass> {
        let report = self.check_grone_sum(g, k, kind)?;
        if report.verdict != Verdict::Equality {
            return Err(Error::InvalidState(format!(
                "{} is {} (lhs {}, rhs {}), not an equality case",
                report.kind, report.verdict, report.lhs, report.rhs
            )));
        }
        Ok(structural_class(g))
    }

    /// Ky Fan `k`-sum against the sum of the `k` largest diagonal entries.
    pub fn check_schur(&self, m: &SymMatrix, k: usize) -> Result<BoundReport> {
        let sp = spectra::spectrum(m, None)?;
        let lhs = sp.kyfan_sum(k)?;
        let mut diag = m.diagonal();
        diag.sort_by(|a, b| b.total_cmp(a));
        let rhs = diag[..k].iter().sum();
        Ok(BoundReport::new(
            BoundKind::Schur,
            k,
            m.order(),
            lhs,
            rhs,
            Expectation::AtLeast,
            Witness::Matrix { order: m.order() },
            self.tol,
        ))
    }

    /// Checks the eigenvalue bands of `S_n^+`:
    /// `n < q1 < n + 1/n`, `3 - 2.5/n < q2 < 3 - 1/n`, `q3 = ... = q_{n-1} = 1`
    /// and `0 <= q_n < d_n`.
    pub fn snplus_band_check(&self, n: usize) -> Result<Vec<BoundReport>> {
        let g = families::star_plus_edge(n)?;
        let sp = spectra::graph_spectrum(&g, MatrixKind::Q, None)?;
        let q = sp.values();
        let nf = n as f64;
        let dn = *g.degree_sequence().as_slice().last().unwrap() as f64;
        let w = || Witness::SnPlus { n };
        let band = |name: &str, i: usize, lhs: f64, rhs: f64, expect| {
            BoundReport::new(
                BoundKind::SnPlusBand { band: name.to_string() },
                i,
                n,
                lhs,
                rhs,
                expect,
                w(),
                self.tol,
            )
        };
        let mut out = vec![
            band("q1>n", 1, q[0], nf, Expectation::Greater),
            band("q1<n+1/n", 1, nf + 1.0 / nf, q[0], Expectation::Greater),
            band("q2>3-2.5/n", 2, q[1], 3.0 - 2.5 / nf, Expectation::Greater),
            band("q2<3-1/n", 2, 3.0 - 1.0 / nf, q[1], Expectation::Greater),
        ];
        for (i, &qi) in q.iter().enumerate().take(n - 1).skip(2) {
            out.push(band("qi=1", i + 1, qi, 1.0, Expectation::Equal));
        }
        out.push(band("qn>=0", n, q[n - 1], 0.0, Expectation::AtLeast));
        out.push(band("qn<dn", n, dn, q[n - 1], Expectation::Greater));
        Ok(out)
    }

    /// Checks a family proposition by the dense eigensolver and, separately,
    /// by exact sign evaluation of the quotient characteristic polynomial.
    pub fn verify_proposition(&self, id: PropositionId, params: FamilyParams) -> Result<PropositionReport> {
        id.check_hypothesis(params)?;
        let family = id.family();
        let g = family.build(params)?;
        let n = g.order();
        let ds = g.degree_sequence();
        let (d1, d2) = (ds.d1() as i128, ds.d2() as i128);
        let sp = spectra::graph_spectrum(&g, MatrixKind::Q, None)?;
        let (q1, q2) = (sp.values()[0], sp.values()[1]);

        let quotient = QuotientMatrix::for_graph(family, params)?;
        let f = quotient::charpoly(&quotient);
        let witness = Witness::Family { family, params };
        let int = Rational::integer;
        let frac = |a: i128, b: i128| Rational::new(a, b).expect("nonzero denominator");
        let pn = frac(params.p as i128, n as i128);

        let claims: Vec<Claim> = match id {
            PropositionId::P3 | PropositionId::P6iii => {
                vec![Claim::q2_above("q2>d2", int(d2))]
            }
            PropositionId::P4 => vec![Claim::q2_at_least("q2>=d2", int(d2))],
            PropositionId::P5 => vec![Claim::sum_above("q1+q2>d1+d2+1", int(d1), int(d2))],
            PropositionId::P6i => vec![
                Claim::q1_above("q1>d1+3/2", int(d1) + frac(3, 2)),
                Claim::q2_above("q2>d2-1/2", int(d2) - frac(1, 2)),
            ],
            PropositionId::P6ii => vec![Claim::q1_above("q1>d1+2", int(d1 + 2))],
            PropositionId::P6iv => vec![
                Claim::q1_above("q1>d1+1+p/n", int(d1 + 1) + pn),
                Claim::q2_above("q2>d2-p/n", int(d2) - pn),
            ],
        };

        let mut reports = Vec::new();
        let mut sign_checks = Vec::new();
        let mut eigen_confirms = true;
        let mut polynomial_confirms = true;
        let mut agree = true;
        let class = structural_class(&g);
        let upper_witness = int(d1 + 1);

        for claim in &claims {
            let (lhs, expect) = match claim.target {
                Target::Q1 => (q1, Expectation::Greater),
                Target::Q2 { strict: true } => (q2, Expectation::Greater),
                Target::Q2 { strict: false } => (q2, Expectation::AtLeast),
                Target::Sum => (q1 + q2, Expectation::Greater),
            };
            let report = BoundReport::new(
                BoundKind::Proposition { id, claim: claim.label.to_string() },
                claim.target.k(),
                n,
                lhs,
                claim.threshold.to_f64(),
                expect,
                witness.clone(),
                self.tol,
            )
            .with_class(class);

            // P4: equality is permitted only on the four-vertex path.
            let eigen_ok = if id == PropositionId::P4 {
                match report.verdict {
                    Verdict::Strict => class != EqualityClass::P4,
                    Verdict::Equality => class == EqualityClass::P4,
                    Verdict::Violated => false,
                }
            } else {
                report.holds()
            };

            let route = claim.polynomial_route(&f, upper_witness);
            let poly_ok = route.iter().all(|c| c.ok);
            let same = match (id, claim.target) {
                (PropositionId::P4, _) => {
                    let root = route[0].exact().is_some_and(|v| v.is_zero());
                    poly_ok == eigen_ok && root == (report.verdict == Verdict::Equality)
                }
                _ => poly_ok == eigen_ok,
            };
            eigen_confirms &= eigen_ok;
            polynomial_confirms &= poly_ok;
            agree &= same;
            sign_checks.extend(route);
            reports.push(report);
        }

        if id == PropositionId::P4 {
            // Also record the sign at x = p, which is not the second degree
            // when p = 1 and r >= 2.
            let x = int(params.p as i128);
            sign_checks.push(SignCheck::new("reference point x=p", x, f.eval_at(x), Sign::Positive, false));
        }

        Ok(PropositionReport {
            id,
            params,
            n,
            d1: d1 as usize,
            d2: d2 as usize,
            quotient_family: quotient.family(),
            charpoly: f.to_ascii(),
            claims: reports,
            sign_checks,
            eigen_confirms,
            polynomial_confirms,
            agree,
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Target {
    Q1,
    Q2 { strict: bool },
    /// `q1 + q2` against `d1 + d2 + 1`.
    Sum,
}

impl Target {
    fn k(self) -> usize {
        match self {
            Target::Q1 => 1,
            _ => 2,
        }
    }
}

struct Claim {
    label: &'static str,
    target: Target,
    threshold: Rational,
    /// `d1` and `d2` for [`Target::Sum`].
    degrees: Option<(Rational, Rational)>,
}

impl Claim {
    fn q1_above(label: &'static str, threshold: Rational) -> Self {
        Claim { label, target: Target::Q1, threshold, degrees: None }
    }

    fn q2_above(label: &'static str, threshold: Rational) -> Self {
        Claim { label, target: Target::Q2 { strict: true }, threshold, degrees: None }
    }

    fn q2_at_least(label: &'static str, threshold: Rational) -> Self {
        Claim { label, target: Target::Q2 { strict: false }, threshold, degrees: None }
    }

    fn sum_above(label: &'static str, d1: Rational, d2: Rational) -> Self {
        let threshold = d1 + d2 + Rational::integer(1);
        Claim { label, target: Target::Sum, threshold, degrees: Some((d1, d2)) }
    }

    /// Sign evaluations that establish the claim for the quotient's roots,
    /// which are Q-eigenvalues of the graph. `f` is monic with real roots,
    /// so `f(t) < 0` puts an odd number of roots above `t`, and
    /// `f(t) > 0 > f(y)` with `t < y` puts at least two roots above `t`.
    fn polynomial_route(&self, f: &IntPolynomial, upper: Rational) -> Vec<SignCheck> {
        let at = |label: String, x: Rational, expected: Sign| {
            SignCheck::new(&label, x, f.eval_at(x), expected, true)
        };
        let t = self.threshold;
        match self.target {
            Target::Q1 => vec![at(format!("{}: f(t)<0", self.label), t, Sign::Negative)],
            Target::Q2 { strict } => {
                let first = if strict { Sign::Positive } else { Sign::NonNegative };
                let mut checks = vec![
                    at(format!("{}: f(t)", self.label), t, first),
                    at(format!("{}: f(d1+1)<0", self.label), upper, Sign::Negative),
                ];
                if upper <= t {
                    checks[1].ok = false;
                }
                checks
            }
            Target::Sum => {
                let (_, d2) = self.degrees.expect("sum claims carry degrees");
                let mut checks = vec![
                    at(format!("{}: f(d1+1)<0", self.label), upper, Sign::Negative),
                    at(format!("{}: f(d2)>=0", self.label), d2, Sign::NonNegative),
                ];
                if upper <= d2 {
                    checks[1].ok = false;
                }
                checks
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sign {
    Negative,
    Positive,
    NonNegative,
}

/// One exact evaluation of the quotient characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignCheck {
    pub label: String,
    /// Exact evaluation point, e.g. `"17/3"`.
    pub point: String,
    pub value: String,
    pub value_f64: f64,
    pub expected: Sign,
    pub ok: bool,
    /// Whether the check takes part in the polynomial verdict.
    pub decisive: bool,
    #[serde(skip)]
    value_exact: Option<Rational>,
}

impl SignCheck {
    fn new(label: &str, point: Rational, value: Rational, expected: Sign, decisive: bool) -> Self {
        let ok = match expected {
            Sign::Negative => value.numer() < 0,
            Sign::Positive => value.numer() > 0,
            Sign::NonNegative => value.numer() >= 0,
        };
        SignCheck {
            label: label.to_string(),
            point: point.to_string(),
            value: value.to_string(),
            value_f64: value.to_f64(),
            expected,
            ok: ok || !decisive,
            decisive,
            value_exact: Some(value),
        }
    }

    /// Exact value; `None` only for deserialized checks.
    pub fn exact(&self) -> Option<Rational> {
        self.value_exact
    }
}

/// Both routes' outcomes for one proposition instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub id: PropositionId,
    pub params: FamilyParams,
    pub n: usize,
    pub d1: usize,
    pub d2: usize,
    pub quotient_family: QuotientFamily,
    pub charpoly: String,
    /// Eigenvalue-based reports, one per claim.
    pub claims: Vec<BoundReport>,
    pub sign_checks: Vec<SignCheck>,
    pub eigen_confirms: bool,
    pub polynomial_confirms: bool,
    pub agree: bool,
}

impl PropositionReport {
    pub fn holds(&self) -> bool {
        self.eigen_confirms && self.polynomial_confirms && self.agree
    }
}

pub fn check_grone_sum(g: &Graph, k: usize, kind: MatrixKind) -> Result<BoundReport> {
    Checker::default().check_grone_sum(g, k, kind)
}

pub fn check_lemma_q1(g: &Graph) -> Result<BoundReport> {
    Checker::default().check_lemma_q1(g)
}

pub fn check_lemma_q2(g: &Graph) -> Result<BoundReport> {
    Checker::default().check_lemma_q2(g)
}

pub fn classify_equality(g: &Graph, k: usize, kind: MatrixKind) -> Result<EqualityClass> {
    Checker::default().classify_equality(g, k, kind)
}

pub fn check_schur(m: &SymMatrix, k: usize) -> Result<BoundReport> {
    Checker::default().check_schur(m, k)
}

pub fn snplus_band_check(n: usize) -> Result<Vec<BoundReport>> {
    Checker::default().snplus_band_check(n)
}

pub fn verify_proposition(id: PropositionId, params: FamilyParams) -> Result<PropositionReport> {
    Checker::default().verify_proposition(id, params)
}

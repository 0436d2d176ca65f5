//! Exhaustive enumeration of labeled connected graphs and parameter sweeps.
//!
//! A labeled graph on `n` vertices is identified with an edge mask over
//! the `n(n-1)/2` vertex pairs (see [`crate::graph::pair_index`]). Work is
//! split into contiguous mask ranges; each range produces a partial
//! [`SweepResult`] and partials are merged in range order, so serial and
//! parallel runs give identical results.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    structural_class, BoundKind, BoundReport, Checker, EqualityClass, Expectation, PropositionId,
    Verdict, Witness,
};
use crate::error::{Error, Result};
use crate::families::{self, FamilyParams};
use crate::format;
use crate::graph::{pair_count, Graph};
use crate::spectra::{self, MatrixKind};

pub const MIN_ORDER: usize = 3;
/// Largest order swept without an explicit opt-in.
pub const DEFAULT_MAX_ORDER: usize = 7;
pub const MAX_ORDER: usize = 8;
/// Number of mask ranges a full sweep is cut into.
pub const DEFAULT_CHUNKS: usize = 256;

/// A contiguous range of edge masks for one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTask {
    pub n: usize,
    pub start: u64,
    pub end: u64,
    pub connected_only: bool,
}

impl EnumerationTask {
    /// The whole mask space `[0, 2^(n(n-1)/2))` for `n` in `3..=8`.
    pub fn full(n: usize) -> Result<Self> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
            return Err(Error::param(format!(
                "enumeration supports {MIN_ORDER} <= n <= {MAX_ORDER}, got {n}"
            )));
        }
        Ok(EnumerationTask {
            n,
            start: 0,
            end: 1u64 << pair_count(n),
            connected_only: true,
        })
    }

    pub fn len(&self) -> u64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }

    /// Cuts the range into at most `parts` contiguous, disjoint pieces
    /// covering it exactly.
    pub fn split(&self, parts: usize) -> Vec<EnumerationTask> {
        let parts = (parts.max(1) as u64).min(self.len().max(1));
        let step = self.len() / parts;
        let extra = self.len() % parts;
        let mut out = Vec::with_capacity(parts as usize);
        let mut start = self.start;
        for i in 0..parts {
            let end = start + step + u64::from(i < extra);
            out.push(EnumerationTask { start, end, ..*self });
            start = end;
        }
        out
    }

    /// Masks in the range passing the connectivity filter, with their graphs.
    pub fn graphs(&self) -> impl Iterator<Item = (u64, Graph)> + '_ {
        let n = self.n;
        (self.start..self.end)
            .filter(move |&m| !self.connected_only || mask_is_connected(n, m))
            .map(move |m| (m, Graph::from_mask(n, m).expect("mask within range")))
    }
}

/// Bitset BFS on the mask directly, without building a [`Graph`].
pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    let mut adj = [0u16; MAX_ORDER];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    let all: u16 = (1u16 << n) - 1;
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Every labeled connected graph on `n` vertices, ordered by edge mask.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let task = EnumerationTask::full(n)?;
    Ok((task.start..task.end)
        .filter(move |&m| mask_is_connected(n, m))
        .map(move |m| Graph::from_mask(n, m).expect("mask within range")))
}

/// A graph or parameter set singled out by a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    /// Edge mask for enumerated graphs, ordinal for parameter sweeps.
    pub key: u64,
    pub witness: String,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<EqualityClass>,
}

/// Aggregate of one sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub checked: u64,
    /// Parameter combinations outside a hypothesis.
    pub skipped: u64,
    pub violations: Vec<Finding>,
    pub equalities: Vec<Finding>,
    /// Gaps just above the equality tolerance.
    pub suspicious: Vec<Finding>,
    /// Per-instance reports for family and counterexample sweeps.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub reports: Vec<BoundReport>,
    pub runtime_secs: f64,
}

impl SweepResult {
    pub fn new(label: impl Into<String>, n: Option<usize>) -> Self {
        SweepResult {
            label: label.into(),
            n,
            checked: 0,
            skipped: 0,
            violations: Vec::new(),
            equalities: Vec::new(),
            suspicious: Vec::new(),
            reports: Vec::new(),
            runtime_secs: 0.0,
        }
    }

    /// Combines two partials. Counts add; finding lists are concatenated
    /// and re-sorted by key, so the result does not depend on merge order.
    pub fn merge(mut self, other: SweepResult) -> SweepResult {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
        self.equalities.extend(other.equalities);
        self.suspicious.extend(other.suspicious);
        self.reports.extend(other.reports);
        self.runtime_secs += other.runtime_secs;
        for list in [&mut self.violations, &mut self.equalities, &mut self.suspicious] {
            list.sort_by_key(|f| f.key);
        }
        self
    }

    /// Equal up to runtime.
    pub fn same_content(&self, other: &SweepResult) -> bool {
        let mut a = self.clone();
        a.runtime_secs = other.runtime_secs;
        a == *other
    }

    pub fn summary_line(&self) -> String {
        let head = match self.n {
            Some(n) => format!("n={n}"),
            None => self.label.clone(),
        };
        format!(
            "{head} checked={} violations={} equalities={}",
            self.checked,
            self.violations.len(),
            self.equalities.len()
        )
    }
}

/// How a sweep is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Execution {
    Serial,
    /// Mask ranges on the rayon pool; serial when built without the
    /// `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Serial
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub checker: Checker,
    pub execution: Execution,
    /// Permits the 2^28-mask sweep at `n = 8`.
    pub allow_order_8: bool,
    pub chunks: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            checker: Checker::default(),
            execution: Execution::default(),
            allow_order_8: false,
            chunks: DEFAULT_CHUNKS,
        }
    }
}

/// Runs `f` on a dedicated pool of `workers` threads (`0` keeps rayon's
/// default). Without the `parallel` feature `f` simply runs.
pub fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    #[cfg(feature = "parallel")]
    {
        if workers == 0 {
            return Ok(f());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::param(format!("cannot build worker pool: {e}")))?;
        Ok(pool.install(f))
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        Ok(f())
    }
}

fn map_ordered<T, R, F>(items: Vec<T>, execution: Execution, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

/// Equality classes a theorem allows for `(k, kind)`.
fn allowed_equalities(k: usize, kind: MatrixKind) -> &'static [EqualityClass] {
    match (k, kind) {
        (2, MatrixKind::Q) => &[EqualityClass::Star, EqualityClass::K3],
        _ => &[EqualityClass::Star],
    }
}

/// Checks `sum_{i<=k} lambda_i >= 1 + sum_{i<=k} d_i` on every graph of
/// the task's range. Equalities outside the allowed classes are reported
/// both as equalities and as violations.
pub fn run_task(task: &EnumerationTask, k: usize, kind: MatrixKind, checker: &Checker) -> Result<SweepResult> {
    if kind == MatrixKind::A {
        return Err(Error::param("degree-sum bounds are stated for L and Q only"));
    }
    if k == 0 || k > task.n {
        return Err(Error::param(format!("k = {k} outside 1..={}", task.n)));
    }
    let started = Instant::now();
    let allowed = allowed_equalities(k, kind);
    let mut out = SweepResult::new(format!("exhaustive-{kind}-k{k}"), Some(task.n));
    for (mask, g) in task.graphs() {
        out.checked += 1;
        let sp = spectra::graph_spectrum(&g, kind, None)?;
        let lhs = sp.kyfan_sum(k)?;
        let rhs = 1.0 + g.degree_sequence().top_sum(k) as f64;
        let gap = lhs - rhs;
        if gap.abs() > checker.tol && gap > 0.0 {
            if gap < crate::bounds::SUSPICIOUS_GAP {
                out.suspicious.push(finding(mask, &g, lhs, rhs, None));
            }
            continue;
        }
        if gap < -checker.tol {
            out.violations.push(finding(mask, &g, lhs, rhs, Some(structural_class(&g))));
            continue;
        }
        let class = structural_class(&g);
        let f = finding(mask, &g, lhs, rhs, Some(class));
        if !allowed.contains(&class) {
            out.violations.push(f.clone());
        }
        out.equalities.push(f);
    }
    out.runtime_secs = started.elapsed().as_secs_f64();
    Ok(out)
}

fn finding(key: u64, g: &Graph, lhs: f64, rhs: f64, class: Option<EqualityClass>) -> Finding {
    Finding {
        key,
        witness: format::to_graph6(g).expect("enumerated graphs are small"),
        lhs,
        rhs,
        class,
    }
}

/// Sweeps one order over all of its masks.
pub fn sweep_order(n: usize, k: usize, kind: MatrixKind, opts: &SweepOptions) -> Result<SweepResult> {
    if n == MAX_ORDER && !opts.allow_order_8 {
        return Err(Error::param("n = 8 sweeps 2^28 masks; enable allow_order_8 to run it"));
    }
    let started = Instant::now();
    let tasks = EnumerationTask::full(n)?.split(opts.chunks);
    let partials = map_ordered(tasks, opts.execution, |t| run_task(&t, k, kind, &opts.checker));
    let mut total = SweepResult::new(format!("exhaustive-{kind}-k{k}"), Some(n));
    for p in partials {
        total = total.merge(p?);
    }
    total.runtime_secs = started.elapsed().as_secs_f64();
    Ok(total)
}

/// Runs [`sweep_order`] for every `n` in `3..=n_max`.
pub fn verify_theorem_exhaustive(
    n_max: usize,
    k: usize,
    kind: MatrixKind,
    opts: &SweepOptions,
) -> Result<Vec<SweepResult>> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n_max) {
        return Err(Error::param(format!(
            "n_max must lie in {MIN_ORDER}..={MAX_ORDER}, got {n_max}"
        )));
    }
    (MIN_ORDER..=n_max)
        .filter(|&n| k <= n)
        .map(|n| sweep_order(n, k, kind, opts))
        .collect()
}

/// Evaluates `sum_{i<=k} q_i` of `S_n^+` against `1 + sum_{i<=k} d_i = n + k + 1`
/// for each `n`. Here a *violation* is an `n` where the star-plus-edge
/// graph fails to be a counterexample; `reports` keep every margin.
pub fn counterexample_snplus(
    k: usize,
    orders: impl IntoIterator<Item = usize>,
    checker: &Checker,
) -> Result<SweepResult> {
    if k < 3 {
        return Err(Error::param(format!("the star-plus-edge counterexample needs k >= 3, got {k}")));
    }
    let started = Instant::now();
    let mut out = SweepResult::new(format!("counterexample-k{k}"), None);
    for n in orders {
        if n < 5 || n < k + 1 {
            return Err(Error::param(format!("need n >= max(5, k + 1) = {}, got {n}", (k + 1).max(5))));
        }
        let g = families::star_plus_edge(n)?;
        let sp = spectra::graph_spectrum(&g, MatrixKind::Q, None)?;
        let lhs = sp.kyfan_sum(k)?;
        let rhs_degrees = 1 + g.degree_sequence().top_sum(k);
        if rhs_degrees != n + k + 1 {
            return Err(Error::InvalidState(format!(
                "degree sum {rhs_degrees} disagrees with n + k + 1 = {}",
                n + k + 1
            )));
        }
        let report = BoundReport::new(
            BoundKind::GroneSum { matrix: MatrixKind::Q },
            k,
            n,
            lhs,
            rhs_degrees as f64,
            Expectation::AtLeast,
            Witness::SnPlus { n },
            checker.tol,
        );
        out.checked += 1;
        if report.verdict != Verdict::Violated {
            out.violations.push(Finding {
                key: n as u64,
                witness: format!("S{n}+"),
                lhs,
                rhs: report.rhs,
                class: None,
            });
        }
        out.reports.push(report);
    }
    out.runtime_secs = started.elapsed().as_secs_f64();
    Ok(out)
}

/// Runs [`Checker::verify_proposition`] over the Cartesian product of the
/// ranges, skipping combinations outside each proposition's hypothesis.
pub fn sweep_families(
    p_range: RangeInclusive<usize>,
    r_range: RangeInclusive<usize>,
    s_range: RangeInclusive<usize>,
    propositions: &[PropositionId],
    opts: &SweepOptions,
) -> Result<SweepResult> {
    if p_range.is_empty() || r_range.is_empty() || s_range.is_empty() {
        return Err(Error::param("parameter ranges must be non-empty"));
    }
    let started = Instant::now();
    let mut jobs = Vec::new();
    for &id in propositions {
        for p in p_range.clone() {
            for r in r_range.clone() {
                for s in s_range.clone() {
                    jobs.push((jobs.len() as u64, id, FamilyParams::new(p, r, s)));
                }
            }
        }
    }
    let checker = opts.checker;
    let partials = map_ordered(jobs, opts.execution, move |(key, id, params)| -> Result<SweepResult> {
        let mut part = SweepResult::new("", None);
        if id.check_hypothesis(params).is_err() {
            part.skipped += 1;
            return Ok(part);
        }
        let rep = checker.verify_proposition(id, params)?;
        part.checked += 1;
        if !rep.holds() {
            let c = rep.claims.iter().find(|c| !c.holds()).unwrap_or(&rep.claims[0]);
            part.violations.push(Finding {
                key,
                witness: format!("{id} {}{params}", id.family()),
                lhs: c.lhs,
                rhs: c.rhs,
                class: c.class,
            });
        }
        for c in &rep.claims {
            if c.verdict == Verdict::Equality {
                part.equalities.push(Finding {
                    key,
                    witness: format!("{id} {}{params}", id.family()),
                    lhs: c.lhs,
                    rhs: c.rhs,
                    class: c.class,
                });
            }
        }
        part.reports = rep.claims;
        Ok(part)
    });
    let label = propositions.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    let mut total = SweepResult::new(format!("sweep[{label}]"), None);
    for p in partials {
        total = total.merge(p?);
    }
    total.runtime_secs = started.elapsed().as_secs_f64();
    Ok(total)
}

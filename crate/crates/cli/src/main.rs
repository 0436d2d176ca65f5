//! `specbound` command-line front end.
//!
//! Exit status: 0 when every check holds, 1 when a violation or mismatch
//! is found, 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use specbound::bounds::{
    structural_class, BoundReport, Checker, EqualityClass, PropositionId, PropositionReport, Verdict, CSV_HEADER,
    EQUALITY_TOL,
};
use specbound::printed;
use specbound::quotient::{self, FamilyKind, QuotientFamily, QuotientMatrix};
use specbound::search::{self, Execution, SweepOptions, SweepResult};
use specbound::spectra::{self, SymMatrix};
use specbound::{format, FamilyParams, Graph, MatrixKind};

const TOL_ENV: &str = "SPECBOUND_TOL";

#[derive(Parser, Debug)]
#[command(name = "specbound", version, about = "Spectral degree-sum bound checks for graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Equality tolerance on lhs - rhs [env: SPECBOUND_TOL; default 1e-7].
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Worker threads for sweeps; 0 uses all available cores.
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every applicable bound on one graph or family instance.
    Check {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// L or Q.
        #[arg(long, default_value = "Q")]
        matrix: MatrixKind,
    },
    /// Check the degree-sum bound on every labeled connected graph.
    Exhaustive {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value = "Q")]
        matrix: MatrixKind,
        /// Permit n = 8 (2^28 edge masks).
        #[arg(long)]
        allow_n8: bool,
        /// Run on the calling thread only.
        #[arg(long)]
        serial: bool,
    },
    /// Verify the family propositions over a parameter grid.
    Sweep {
        #[arg(long, default_value = "1..5", value_parser = parse_range)]
        p: RangeInclusive<usize>,
        #[arg(long, default_value = "1..5", value_parser = parse_range)]
        r: RangeInclusive<usize>,
        #[arg(long, default_value = "1..5", value_parser = parse_range)]
        s: RangeInclusive<usize>,
        /// Comma-separated ids (P3, P4, P5, P6i, P6ii, P6iii, P6iv); all by default.
        #[arg(long, value_delimiter = ',')]
        props: Vec<PropositionId>,
        #[arg(long)]
        serial: bool,
    },
    /// Show that the star-plus-edge graph breaks the bound for k >= 3.
    Counterexample {
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Orders, e.g. `5..40` (inclusive) or a single value.
        #[arg(long, default_value = "5..40", value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// Print the exact quotient characteristic polynomial and compare it
    /// with the reference form.
    Charpoly {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Print the A, L or Q eigenvalues of a graph.
    Spectrum {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "Q")]
        matrix: MatrixKind,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// graph6 line.
    #[arg(long, conflicts_with_all = ["edges", "family"])]
    graph6: Option<String>,
    /// Edge list such as `0-1,0-2,1-2`.
    #[arg(long, conflicts_with = "family")]
    edges: Option<String>,
    /// Vertex count for --edges (default: largest endpoint + 1).
    #[arg(long, requires = "edges")]
    n: Option<usize>,
    /// Family name, H or G, with --p/--r/--s.
    #[arg(long, requires_all = ["p", "r", "s"])]
    family: Option<FamilyKind>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
}

/// A failure that maps to an exit status.
enum Failure {
    Usage(String),
    Io(String),
}

impl From<specbound::Error> for Failure {
    fn from(e: specbound::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a non-negative integer: {t:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok(lo..=hi)
}

fn resolve_tol(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{TOL_ENV}={v:?} is not a number")))?,
            Err(_) => EQUALITY_TOL,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive and finite, got {tol}")));
    }
    Ok(tol)
}

impl GraphInput {
    fn family_params(&self) -> Option<(FamilyKind, FamilyParams)> {
        let kind = self.family?;
        Some((kind, FamilyParams::new(self.p?, self.r?, self.s?)))
    }

    fn load(&self) -> Result<Graph, Failure> {
        if let Some(line) = &self.graph6 {
            return Ok(format::from_graph6(line)?);
        }
        if let Some(edges) = &self.edges {
            return Ok(format::parse_edge_list(edges, self.n)?);
        }
        if let Some((kind, params)) = self.family_params() {
            return Ok(kind.build(params)?);
        }
        Err(Failure::Usage("give a graph with --graph6, --edges or --family with --p/--r/--s".into()))
    }
}

fn csv_document(rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn report_line(r: &BoundReport) -> String {
    let class = r.class.map(|c| format!(" [{c}]")).unwrap_or_default();
    let flag = if r.suspicious { " (near-equality)" } else { "" };
    format!(
        "{:<24} k={:<2} lhs={:>16.10} rhs={:>16.10} {:<9} {}{class}{flag}",
        r.kind.to_string(),
        r.k,
        r.lhs,
        r.rhs,
        r.verdict.to_string(),
        if r.holds() { "ok" } else { "VIOLATED" }
    )
}

/// Equality classes that a degree-sum equality may take for `(k, kind)`.
fn allowed_classes(k: usize, kind: MatrixKind) -> Option<&'static [EqualityClass]> {
    match (k, kind) {
        (1, _) => Some(&[EqualityClass::Star]),
        (2, MatrixKind::Q) => Some(&[EqualityClass::Star, EqualityClass::K3]),
        (2, MatrixKind::L) => Some(&[EqualityClass::Star]),
        _ => None,
    }
}

fn cmd_check(graph: &GraphInput, k: usize, matrix: MatrixKind, checker: &Checker, fmt: OutputFormat) -> Outcome {
    let g = graph.load()?;
    let mut reports = vec![checker.check_grone_sum(&g, k, matrix)?];
    let mut flagged = Vec::new();
    if reports[0].verdict == Verdict::Equality {
        let class = structural_class(&g);
        if let Some(allowed) = allowed_classes(k, matrix) {
            if !allowed.contains(&class) {
                flagged.push(format!("equality with class {class} outside {allowed:?}"));
            }
        }
    }
    reports.push(checker.check_lemma_q1(&g)?);
    reports.push(checker.check_lemma_q2(&g)?);
    let m = SymMatrix::from_graph(&g, matrix);
    reports.push(checker.check_schur(&m, k.min(g.order()))?);

    let mut propositions: Vec<PropositionReport> = Vec::new();
    if let Some((kind, params)) = graph.family_params() {
        for id in PropositionId::ALL {
            if id.family() == kind && id.check_hypothesis(params).is_ok() {
                propositions.push(checker.verify_proposition(id, params)?);
            }
        }
    }
    let clean = flagged.is_empty() && reports.iter().all(|r| r.holds()) && propositions.iter().all(|p| p.holds());

    let graph6 = format::to_graph6(&g).ok();
    let text = match fmt {
        OutputFormat::Json => to_json(&json!({
            "graph6": graph6,
            "n": g.order(),
            "degrees": g.degree_sequence().as_slice(),
            "class": structural_class(&g),
            "reports": reports,
            "propositions": propositions,
            "flags": flagged,
            "clean": clean,
        })),
        OutputFormat::Csv => csv_document(
            reports.iter().chain(propositions.iter().flat_map(|p| &p.claims)).map(BoundReport::csv_row),
        ),
        OutputFormat::Table => {
            let mut out = String::new();
            let name = graph6.unwrap_or_else(|| format::to_json(&g));
            let _ = writeln!(out, "graph {name}  n={}  degrees={:?}", g.order(), g.degree_sequence().as_slice());
            for r in &reports {
                let _ = writeln!(out, "{}", report_line(r));
            }
            for p in &propositions {
                let _ = writeln!(
                    out,
                    "{} {}{}: eigen={} polynomial={} agree={}",
                    p.id,
                    p.id.family(),
                    p.params,
                    p.eigen_confirms,
                    p.polynomial_confirms,
                    p.agree
                );
                for c in &p.claims {
                    let _ = writeln!(out, "  {}", report_line(c));
                }
                for s in &p.sign_checks {
                    let _ = writeln!(out, "  f({}) = {}  expect {:?}  {}", s.point, s.value, s.expected, if s.ok { "ok" } else { "FAILED" });
                }
            }
            for f in &flagged {
                let _ = writeln!(out, "FLAG {f}");
            }
            out
        }
    };
    Ok((text, clean))
}

fn sweep_options(checker: Checker, serial: bool) -> SweepOptions {
    SweepOptions {
        checker,
        execution: if serial { Execution::Serial } else { Execution::default() },
        ..SweepOptions::default()
    }
}

fn finding_rows(r: &SweepResult, kind: &str, k: usize) -> Vec<String> {
    let n = r.n.unwrap_or(0);
    let row = |f: &search::Finding, verdict: &str| format!("{kind},{k},{n},{:.12},{:.12},{verdict},{}", f.lhs, f.rhs, f.witness);
    r.violations.iter().map(|f| row(f, "violated")).chain(r.equalities.iter().map(|f| row(f, "equality"))).collect()
}

fn sweep_table(r: &SweepResult) -> String {
    let mut out = format!("{}  skipped={}  runtime={:.2}s\n", r.summary_line(), r.skipped, r.runtime_secs);
    for f in &r.violations {
        let _ = writeln!(out, "  violation {} lhs={:.10} rhs={:.10}", f.witness, f.lhs, f.rhs);
    }
    for f in &r.suspicious {
        let _ = writeln!(out, "  near-equality {} lhs={:.10} rhs={:.10}", f.witness, f.lhs, f.rhs);
    }
    out
}

fn cmd_exhaustive(
    nmax: usize,
    k: usize,
    matrix: MatrixKind,
    allow_n8: bool,
    serial: bool,
    checker: Checker,
    fmt: OutputFormat,
) -> Outcome {
    let opts = SweepOptions { allow_order_8: allow_n8, ..sweep_options(checker, serial) };
    let results = search::verify_theorem_exhaustive(nmax, k, matrix, &opts)?;
    let clean = results.iter().all(|r| r.violations.is_empty());
    let kind = format!("grone-{matrix}");
    let text = match fmt {
        OutputFormat::Table => results.iter().map(sweep_table).collect(),
        OutputFormat::Json => to_json(&json!({ "k": k, "matrix": matrix.to_string(), "results": results, "clean": clean })),
        OutputFormat::Csv => csv_document(results.iter().flat_map(|r| finding_rows(r, &kind, k))),
    };
    if fmt != OutputFormat::Table {
        for r in &results {
            eprintln!("{}", r.summary_line());
        }
    }
    Ok((text, clean))
}

fn cmd_sweep(
    ranges: [RangeInclusive<usize>; 3],
    props: &[PropositionId],
    serial: bool,
    checker: Checker,
    fmt: OutputFormat,
) -> Outcome {
    let props = if props.is_empty() { PropositionId::ALL.to_vec() } else { props.to_vec() };
    let [p, r, s] = ranges;
    let result = search::sweep_families(p, r, s, &props, &sweep_options(checker, serial))?;
    let clean = result.violations.is_empty();
    let text = match fmt {
        OutputFormat::Table => sweep_table(&result),
        OutputFormat::Json => to_json(&result),
        OutputFormat::Csv => csv_document(result.reports.iter().map(BoundReport::csv_row)),
    };
    if fmt != OutputFormat::Table {
        eprintln!("{}", result.summary_line());
    }
    Ok((text, clean))
}

fn cmd_counterexample(k: usize, orders: RangeInclusive<usize>, checker: Checker, fmt: OutputFormat) -> Outcome {
    let result = search::counterexample_snplus(k, orders, &checker)?;
    let clean = result.violations.is_empty();
    let text = match fmt {
        OutputFormat::Table => {
            let mut out = String::new();
            for r in &result.reports {
                let _ = writeln!(
                    out,
                    "n={:<4} sum of {k} largest q = {:>14.10}  n+k+1 = {:<5} margin = {:.10}  {}",
                    r.n,
                    r.lhs,
                    r.rhs,
                    r.rhs - r.lhs,
                    if r.verdict == Verdict::Violated { "counterexample" } else { "NOT a counterexample" }
                );
            }
            out
        }
        OutputFormat::Json => to_json(&result),
        OutputFormat::Csv => csv_document(result.reports.iter().map(BoundReport::csv_row)),
    };
    Ok((text, clean))
}

#[derive(Serialize)]
struct ReferenceComparison {
    label: &'static str,
    computed: String,
    reference: String,
    matches: bool,
}

fn reference_forms(m: &QuotientMatrix) -> Vec<ReferenceComparison> {
    let f = quotient::charpoly(m);
    let FamilyParams { p, r, s } = m.params();
    let cmp = |label, computed: String, reference: String| ReferenceComparison {
        label,
        matches: computed == reference,
        computed,
        reference,
    };
    let mut out = Vec::new();
    match m.family() {
        QuotientFamily::H => {
            out.push(cmp("polynomial", f.to_ascii(), printed::h_quintic(p, r, s).to_ascii()));
            if r >= s {
                out.push(cmp(
                    "f(p+s)",
                    f.eval_int((p + s) as i128).to_string(),
                    printed::h_value_at_p_plus_s(p, s, r - s).to_string(),
                ));
            }
        }
        QuotientFamily::HS0 => {
            out.push(cmp("polynomial", f.to_ascii(), printed::h_s0_quartic(p, r).to_ascii()));
            out.push(cmp("f(p)", f.eval_int(p as i128).to_string(), printed::h_s0_value_at_p(p, r).to_string()));
        }
        QuotientFamily::G => out.push(cmp("polynomial", f.to_ascii(), printed::g_quintic(p, r, s).to_ascii())),
        QuotientFamily::GP0 => {
            out.push(cmp("polynomial", f.to_ascii(), printed::g_p0_quartic(r, s).to_ascii()));
            out.push(cmp(
                "f(s+1)",
                f.eval_int(s as i128 + 1).to_string(),
                printed::g_p0_value_at_s_plus_1(r, s).to_string(),
            ));
        }
    }
    out
}

fn cmd_charpoly(family: FamilyKind, params: FamilyParams, fmt: OutputFormat) -> Outcome {
    let m = QuotientMatrix::for_graph(family, params)?;
    let f = quotient::charpoly(&m);
    let comparisons = reference_forms(&m);
    let clean = comparisons.iter().all(|c| c.matches);
    let text = match fmt {
        OutputFormat::Table => {
            let mut out = format!("quotient {} {}\n", m.family(), params);
            for row in m.entries() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
                let _ = writeln!(out, "  [{}]", cells.join(""));
            }
            let _ = writeln!(out, "charpoly: {}", f.to_ascii());
            for c in &comparisons {
                let _ = writeln!(
                    out,
                    "{} {}: computed {}  reference {}",
                    if c.matches { "match   " } else { "MISMATCH" },
                    c.label,
                    c.computed,
                    c.reference
                );
            }
            out
        }
        OutputFormat::Json => to_json(&json!({
            "family": m.family(),
            "params": params,
            "matrix": m.entries(),
            "charpoly": f.to_ascii(),
            "coefficients": f.coeffs(),
            "reference": comparisons,
            "clean": clean,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("family,p,r,s,item,computed,reference,match\n");
            for c in &comparisons {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},\"{}\",\"{}\",{}",
                    m.family(),
                    params.p,
                    params.r,
                    params.s,
                    c.label,
                    c.computed,
                    c.reference,
                    c.matches
                );
            }
            out
        }
    };
    Ok((text, clean))
}

fn cmd_spectrum(graph: &GraphInput, matrix: MatrixKind, fmt: OutputFormat) -> Outcome {
    let g = graph.load()?;
    let sp = spectra::graph_spectrum(&g, matrix, None)?;
    let text = match fmt {
        OutputFormat::Table => {
            let mut out = format!("{matrix} spectrum, n={}\n", g.order());
            for (i, v) in sp.values().iter().enumerate() {
                let _ = writeln!(out, "{:>4}  {:.12}", i + 1, v);
            }
            out
        }
        OutputFormat::Json => to_json(&json!({
            "matrix": matrix.to_string(),
            "n": g.order(),
            "eigenvalues": sp.values(),
            "tol": sp.tol(),
        })),
        OutputFormat::Csv => {
            let mut out = String::from("index,eigenvalue\n");
            for (i, v) in sp.values().iter().enumerate() {
                let _ = writeln!(out, "{},{:.12}", i + 1, v);
            }
            out
        }
    };
    Ok((text, true))
}

fn run(cli: Cli) -> Outcome {
    let checker = Checker::new(resolve_tol(cli.tol)?);
    let fmt = cli.format;
    let workers = cli.workers;
    match cli.command {
        Command::Check { graph, k, matrix } => cmd_check(&graph, k, matrix, &checker, fmt),
        Command::Exhaustive { nmax, k, matrix, allow_n8, serial } => {
            search::with_workers(workers, || cmd_exhaustive(nmax, k, matrix, allow_n8, serial, checker, fmt))?
        }
        Command::Sweep { p, r, s, props, serial } => {
            search::with_workers(workers, || cmd_sweep([p, r, s], &props, serial, checker, fmt))?
        }
        Command::Counterexample { k, n } => cmd_counterexample(k, n, checker, fmt),
        Command::Charpoly { family, p, r, s } => cmd_charpoly(family, FamilyParams::new(p, r, s), fmt),
        Command::Spectrum { graph, matrix } => cmd_spectrum(&graph, matrix, fmt),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|(text, clean)| emit(&text, out.as_ref()).map(|_| clean));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("specbound: {msg}");
            ExitCode::from(2)
        }
    }
}

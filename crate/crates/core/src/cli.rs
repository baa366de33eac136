//! The `regturan` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or routing error, 3 the
//! oracle contradicts an exact formula value.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construct::{construct_for, RouteError};
use crate::formulas::{ex_turan, rex_formula, RexStatus, RexValue};
use crate::graph6;
use crate::oracle::{rex_exact, verify_claim, OracleOutcome, SearchBudget, MAX_ORDER};
use crate::pattern::ForbiddenPattern;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

/// Inclusive range of orders, written `A` or `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
}

impl NRange {
    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad order {t:?}: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(NRange { start, end })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Md,
}

#[derive(Debug, Parser)]
#[command(name = "regturan", version, about = "Regular Turán numbers: constructions, closed forms and exhaustive search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add run metadata (timings, search counters) as comment lines.
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Edge insertions allowed per degree attempt.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock seconds allowed per degree attempt.
    #[arg(long)]
    budget_seconds: Option<u64>,
    /// Skip degrees above floor(2n/(g+2)) on odd n for K3 and odd cycles.
    #[arg(long)]
    odd_girth_cap: bool,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(nodes) = self.budget_nodes {
            b.max_nodes = Some(nodes.max(1));
        }
        if let Some(s) = self.budget_seconds {
            b.max_time = Some(Duration::from_secs(s.max(1)));
        }
        b.odd_girth_cap = self.odd_girth_cap;
        b
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a regular F-free graph and print its plan and graph6 line.
    Construct {
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        forbid: ForbiddenPattern,
        #[command(flatten)]
        output: Output,
    },
    /// Check graph6 graphs for regularity, F-freeness and edge count.
    Verify {
        #[arg(long)]
        forbid: ForbiddenPattern,
        /// Claimed degree; defaults to the degree of vertex 0.
        #[arg(long)]
        degree: Option<usize>,
        /// File of graph6 lines; stdin when absent and no graphs are given.
        #[arg(long)]
        input: Option<PathBuf>,
        /// graph6 strings.
        graphs: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form rex values, optionally checked by exhaustive search.
    Rex {
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        forbid: ForbiddenPattern,
        /// Also run the exhaustive search.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Table of Turán bound, rex value and witness degree per n.
    Table {
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        forbid: ForbiddenPattern,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Run built-in consistency checks.
    Selftest {
        /// Largest order for the exhaustive-search checks.
        #[arg(long, default_value_t = 7)]
        oracle_max_n: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses `args` (program name first) and runs the command, writing results to `out`
/// (or the `--out` file) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (report, output) = match cli.command {
        Command::Construct { n, forbid, output } => (cmd_construct(n, &forbid, output.verbose), output),
        Command::Verify { forbid, degree, input, graphs, output } => {
            (cmd_verify(&forbid, degree, input, graphs), output)
        }
        Command::Rex { n, forbid, oracle, budget, format, output } => {
            (cmd_rex(n, &forbid, oracle.then(|| budget.budget()), format, output.verbose), output)
        }
        Command::Table { n, forbid, format, output } => (cmd_table(n, &forbid, format), output),
        Command::Selftest { oracle_max_n, output } => (cmd_selftest(oracle_max_n), output),
    };
    if !report.errors.is_empty() {
        let _ = err.write_all(report.errors.as_bytes());
    }
    let written = match &output.out {
        Some(path) => std::fs::write(path, &report.text),
        None => out.write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    report.code
}

/// What a command produced: the text for stdout, diagnostics and the exit code.
struct Report {
    text: String,
    errors: String,
    code: i32,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            errors: String::new(),
            code: EXIT_OK,
        }
    }

    /// Keeps the most severe code, ranking disagreement over verification over usage.
    fn raise(&mut self, code: i32) {
        let rank = |c| match c {
            EXIT_DISAGREE => 3,
            EXIT_VERIFY => 2,
            EXIT_USAGE => 1,
            _ => 0,
        };
        if rank(code) > rank(self.code) {
            self.code = code;
        }
    }
}

/// Maps over `ns` concurrently when the `parallel` feature is on, keeping order.
fn fan_out<T, F>(ns: NRange, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ns.iter().collect::<Vec<_>>().into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ns.iter().map(f).collect()
    }
}

fn cmd_construct(ns: NRange, f: &ForbiddenPattern, verbose: bool) -> Report {
    let mut rep = Report::new();
    let blocks = fan_out(ns, |n| {
        let start = Instant::now();
        let built = construct_for(n, f);
        (n, built, start.elapsed())
    });
    for (n, built, elapsed) in blocks {
        match built {
            Ok(r) => {
                let _ = writeln!(rep.text, "# n: {n}\n# forbid: {f}");
                rep.text.push_str(&r.plan.to_string());
                let check = verify_claim(&r.graph, f, r.claimed_degree);
                let _ = writeln!(rep.text, "# edges: {}", r.claimed_edges);
                let _ = writeln!(rep.text, "# verify: {check}");
                if verbose {
                    let _ = writeln!(rep.text, "# elapsed-ms: {}", elapsed.as_millis());
                }
                match graph6::encode(&r.graph) {
                    Ok(line) => {
                        let _ = writeln!(rep.text, "{line}");
                    }
                    Err(e) => {
                        let _ = writeln!(rep.errors, "error: n={n}: {e}");
                        rep.raise(EXIT_VERIFY);
                    }
                }
                if !check.passed() {
                    let _ = writeln!(rep.errors, "error: n={n}: construction failed verification: {check}");
                    rep.raise(EXIT_VERIFY);
                }
            }
            Err(RouteError::Construction(e)) => {
                let _ = writeln!(rep.errors, "error: n={n}: construction failed its own checks: {e}");
                rep.raise(EXIT_VERIFY);
            }
            Err(e) => {
                let _ = writeln!(rep.errors, "error: n={n}: {e}");
                rep.raise(EXIT_USAGE);
            }
        }
    }
    rep
}

fn read_graph_lines(input: Option<PathBuf>, graphs: Vec<String>) -> io::Result<Vec<String>> {
    let lines: Vec<String> = match input {
        Some(path) => std::fs::read_to_string(path)?.lines().map(str::to_string).collect(),
        None if graphs.is_empty() => io::stdin().lock().lines().collect::<io::Result<_>>()?,
        None => graphs,
    };
    Ok(lines
        .into_iter()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn cmd_verify(f: &ForbiddenPattern, degree: Option<usize>, input: Option<PathBuf>, graphs: Vec<String>) -> Report {
    let mut rep = Report::new();
    let lines = match read_graph_lines(input, graphs) {
        Ok(l) => l,
        Err(e) => {
            let _ = writeln!(rep.errors, "error: cannot read graphs: {e}");
            rep.raise(EXIT_USAGE);
            return rep;
        }
    };
    for line in lines {
        let g = match graph6::decode(line.as_bytes()) {
            Ok(g) => g,
            Err(e) => {
                let _ = writeln!(rep.errors, "error: {line}: {e}");
                rep.raise(EXIT_USAGE);
                continue;
            }
        };
        let d = degree.unwrap_or_else(|| if g.order() == 0 { 0 } else { g.degree(0) });
        let check = verify_claim(&g, f, d);
        let verdict = if check.passed() { "ok" } else { "FAIL" };
        let _ = writeln!(rep.text, "{verdict} {line} n={} forbid={f} {check}", g.order());
        if !check.passed() {
            rep.raise(EXIT_VERIFY);
        }
    }
    rep
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn render(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).expect("in-memory write");
            for r in rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        Format::Md => {
            let mut s = String::new();
            let _ = writeln!(s, "| {} |", header.join(" | "));
            let _ = writeln!(s, "|{}", "---|".repeat(header.len()));
            for r in rows {
                let _ = writeln!(s, "| {} |", r.join(" | "));
            }
            s
        }
    }
}

/// How an oracle result relates to a formula value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    /// Both values known and equal.
    Yes,
    /// Values differ but neither refutes the other.
    Consistent,
    /// A proven bound is violated.
    No,
    /// One of the values is missing.
    NotApplicable,
}

impl std::fmt::Display for Agreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Agreement::Yes => "yes",
            Agreement::Consistent => "consistent",
            Agreement::No => "no",
            Agreement::NotApplicable => "n/a",
        })
    }
}

/// Compares formula and oracle values. A conflict is an exact value beaten by a
/// witness, or two exact values that differ.
pub fn compare(formula: &RexValue, oracle: &RexValue) -> Agreement {
    let (Some(fv), Some(ov)) = (formula.value, oracle.value) else {
        return Agreement::NotApplicable;
    };
    let f_exact = formula.status == RexStatus::Exact;
    let o_exact = oracle.status == RexStatus::Exact;
    let f_bound = matches!(formula.status, RexStatus::Exact | RexStatus::LowerBound);
    if (f_exact && ov > fv) || (o_exact && f_bound && fv > ov) || (f_exact && o_exact && fv != ov) {
        Agreement::No
    } else if fv == ov {
        Agreement::Yes
    } else {
        Agreement::Consistent
    }
}

fn cmd_rex(ns: NRange, f: &ForbiddenPattern, budget: Option<SearchBudget>, format: Format, verbose: bool) -> Report {
    let mut rep = Report::new();
    if budget.is_some() && ns.end > MAX_ORDER {
        let _ = writeln!(rep.errors, "error: the search handles n <= {MAX_ORDER}");
        rep.raise(EXIT_USAGE);
        return rep;
    }
    let results = fan_out(ns, |n| {
        let formula = rex_formula(n, f);
        let start = Instant::now();
        let oracle: Option<OracleOutcome> = budget.as_ref().map(|b| rex_exact(n, f, b).expect("order checked"));
        (formula, oracle, start.elapsed())
    });
    let header = [
        "n",
        "pattern",
        "formula_value",
        "formula_status",
        "source",
        "oracle_value",
        "oracle_status",
        "agree",
    ];
    let mut rows = Vec::new();
    let mut notes = String::new();
    for (formula, oracle, elapsed) in &results {
        let agree = oracle.as_ref().map_or(Agreement::NotApplicable, |o| compare(formula, &o.rex));
        if agree == Agreement::No {
            let _ = writeln!(
                rep.errors,
                "disagreement at n={}: formula {} ({}), oracle {} ({})",
                formula.n,
                opt(formula.value),
                formula.status,
                opt(oracle.as_ref().and_then(|o| o.rex.value)),
                opt(oracle.as_ref().map(|o| o.rex.status)),
            );
            rep.raise(EXIT_DISAGREE);
        }
        let mut status = formula.status.to_string();
        if formula.threshold_assumed {
            status.push_str("+threshold");
        }
        rows.push(vec![
            formula.n.to_string(),
            f.to_string(),
            opt(formula.value),
            status,
            formula.source.to_string(),
            opt(oracle.as_ref().and_then(|o| o.rex.value)),
            opt(oracle.as_ref().map(|o| o.rex.status)),
            agree.to_string(),
        ]);
        if verbose {
            if let Some(o) = oracle {
                let degrees: Vec<String> = o.degrees_tried.iter().map(|(d, r)| format!("{d}:{r}")).collect();
                let _ = writeln!(
                    notes,
                    "# n={} degrees {} nodes={} elapsed-ms={}",
                    formula.n,
                    degrees.join(" "),
                    o.nodes_expanded,
                    elapsed.as_millis()
                );
            }
            if let Some(c) = formula.conjectured {
                let _ = writeln!(notes, "# n={} conjectured {c}", formula.n);
            }
        }
    }
    rep.text = render(format, &header, &rows);
    rep.text.push_str(&notes);
    rep
}

/// `ex(n, K_{chi(F)})`, or `C(n, 2)` when `n` is too small for the Turán graph; `None`
/// for bipartite patterns.
fn ex_cap(n: usize, f: &ForbiddenPattern) -> Option<usize> {
    let chi = f.chromatic_number();
    if chi < 3 {
        return None;
    }
    Some(ex_turan(n, chi - 1).unwrap_or(n * n.saturating_sub(1) / 2))
}

fn cmd_table(ns: NRange, f: &ForbiddenPattern, format: Format) -> Report {
    let mut rep = Report::new();
    let header = ["n", "pattern", "ex_cap", "rex_value", "status", "source", "witness_degree"];
    let rows = fan_out(ns, |n| {
        let mut v = rex_formula(n, f);
        let attached = v.attach_witness();
        (v, attached)
    });
    let mut out = Vec::new();
    for (v, attached) in rows {
        if let Err(e) = attached {
            let _ = writeln!(rep.errors, "error: n={}: exact value has no witness: {e}", v.n);
            rep.raise(EXIT_VERIFY);
        }
        let mut status = v.status.to_string();
        if v.threshold_assumed {
            status.push_str("+threshold");
        }
        out.push(vec![
            v.n.to_string(),
            f.to_string(),
            opt(ex_cap(v.n, f)),
            opt(v.value),
            status,
            v.source.to_string(),
            opt(v.witness.as_ref().map(|g| if g.order() == 0 { 0 } else { g.degree(0) })),
        ]);
    }
    rep.text = render(format, &header, &out);
    rep
}

fn cmd_selftest(oracle_max_n: usize) -> Report {
    let mut rep = Report::new();
    let patterns: Vec<ForbiddenPattern> = ["K3", "K4", "K5", "K6", "K4-e", "C5", "C7", "custom:0-1,1-2,2-0,0-3"]
        .iter()
        .map(|s| s.parse().expect("built-in pattern"))
        .collect();
    let line = |rep: &mut Report, name: &str, failures: Vec<String>, code: i32| {
        if failures.is_empty() {
            let _ = writeln!(rep.text, "ok {name}");
        } else {
            let _ = writeln!(rep.text, "FAIL {name}: {}", failures.join("; "));
            rep.raise(code);
        }
    };

    let mut fails = Vec::new();
    for f in &patterns {
        for n in 1..=40 {
            match construct_for(n, f) {
                Ok(r) => {
                    let check = verify_claim(&r.graph, f, r.claimed_degree);
                    if !check.passed() {
                        fails.push(format!("n={n} {f}: {check}"));
                    }
                }
                Err(RouteError::EvenOrder { .. }) => {}
                Err(e) => fails.push(format!("n={n} {f}: {e}")),
            }
        }
    }
    line(&mut rep, "constructions verify for n <= 40", fails, EXIT_VERIFY);

    let mut fails = Vec::new();
    for f in &patterns {
        for n in 1..=40 {
            let mut v = rex_formula(n, f);
            if let Err(e) = v.attach_witness() {
                fails.push(format!("n={n} {f}: {e}"));
            }
        }
    }
    line(&mut rep, "exact formula values have witnesses for n <= 40", fails, EXIT_VERIFY);

    let mut fails = Vec::new();
    let budget = SearchBudget::default();
    for f in &patterns[..6] {
        for n in 1..=oracle_max_n.min(MAX_ORDER) {
            let o = match rex_exact(n, f, &budget) {
                Ok(o) => o,
                Err(e) => {
                    fails.push(format!("n={n} {f}: {e}"));
                    continue;
                }
            };
            if compare(&rex_formula(n, f), &o.rex) == Agreement::No {
                fails.push(format!("n={n} {f}: formula {:?} vs oracle {:?}", rex_formula(n, f).value, o.rex.value));
            }
        }
    }
    line(&mut rep, &format!("oracle agrees with formulas for n <= {oracle_max_n}"), fails, EXIT_DISAGREE);
    rep
}

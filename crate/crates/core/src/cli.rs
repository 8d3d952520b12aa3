//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 bad or disconnected input,
//! 3 verification mismatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::closed_form;
use crate::error::Error;
use crate::exact;
use crate::graph::{cycle, path, prism_family, Graph, PrismSpec};
use crate::render;
use crate::spectral::{self, SpectralTreeCount};
use crate::verify::{self, VerifyConfig, SPECTRAL_REL_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Graphs above this many vertices are routed to the closed forms instead
/// of the exact solver.
pub const EXACT_VERTEX_LIMIT: usize = 400;

#[derive(Debug, Parser)]
#[command(name = "invkit", version, about = "Exact resistance-distance graph invariants")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants for a family member or an edge-list file.
    Compute(ComputeArgs),
    /// Print Kf / Kf* / tau tables for G_n.
    Table(TableArgs),
    /// Check exact values against the closed forms and the spectral split.
    Verify(VerifyArgs),
    /// Report Kf/W and its distance from 1/6.
    Ratio(RatioArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Gn,
    Grn,
    Cycle,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Spectral,
    ClosedForm,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, clap::Args)]
struct ComputeArgs {
    #[arg(long, value_enum, conflicts_with = "input", requires = "n")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    /// Deleted vertical edges (1-based), e.g. 2,4.
    #[arg(long, value_delimiter = ',', conflicts_with = "r")]
    deleted: Option<Vec<usize>>,
    /// Delete this many vertical edges chosen by --seed.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge-list file: header "n m", then m lines "u v" (0-based).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exact")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    ClosedForm,
    Exact,
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    /// 1: Kf and tau for G_3..G_11. 2: Kf* for G_3..G_15.
    #[arg(long, conflicts_with_all = ["family", "range", "columns"])]
    table: Option<u8>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Inclusive range a..b of n.
    #[arg(long)]
    range: Option<String>,
    /// Any of kf, tau, kfstar, wiener, gutman.
    #[arg(long, value_delimiter = ',')]
    columns: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "closed-form")]
    method: TableMethod,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 20)]
    n_max: usize,
    #[arg(long, default_value_t = 8)]
    exhaustive_d_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, hide = true)]
    sabotage: bool,
}

#[derive(Debug, clap::Args)]
struct RatioArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, conflicts_with_all = ["n_list", "n_range"])]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', conflicts_with = "n_range")]
    n_list: Option<Vec<usize>>,
    #[arg(long)]
    n_range: Option<String>,
    #[arg(long, default_value_t = 1)]
    step: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected | Error::Parse { .. } => EXIT_BAD_INPUT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

type CliResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(a, out, err),
        Command::Table(a) => table(a, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Ratio(a) => ratio(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

// ---------------------------------------------------------------- compute

#[derive(Debug, Clone, PartialEq)]
enum Scalar {
    Rational(BigRational),
    Integer(BigInt),
    Approx(f64),
    TreeEstimate(SpectralTreeCount),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Rational(r) => render::rational(r),
            Scalar::Integer(i) => i.to_string(),
            Scalar::Approx(v) => format!("{v:.10}"),
            Scalar::TreeEstimate(t) => match t.rounded {
                Some(v) if v < 1e15 => format!("{v:.0}"),
                _ => format!("{:.9e}", t.ln.exp()),
            },
        }
    }
}

/// One output row: a graph descriptor plus whatever one method produced.
#[derive(Debug, Clone, PartialEq)]
struct OutputRecord {
    family: String,
    n: usize,
    r: Option<usize>,
    deleted: Vec<usize>,
    method: crate::Method,
    kf: Option<Scalar>,
    kf_star: Option<Scalar>,
    tau: Option<Scalar>,
    wiener: Option<Scalar>,
    gutman: Option<Scalar>,
}

const CSV_HEADER: &str = "family,n,r,deleted,method,kf,kf_star,tau,wiener,gutman";

impl OutputRecord {
    fn cells(&self) -> Vec<String> {
        let opt = |s: &Option<Scalar>| s.as_ref().map(Scalar::text).unwrap_or_default();
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.r.map(|r| r.to_string()).unwrap_or_default(),
            self.deleted
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(";"),
            self.method.to_string(),
            opt(&self.kf),
            opt(&self.kf_star),
            opt(&self.tau),
            opt(&self.wiener),
            opt(&self.gutman),
        ]
    }

    fn json(&self) -> Value {
        let frac = |s: &Option<Scalar>| match s {
            Some(Scalar::Rational(r)) => (json!(r.numer().to_string()), json!(r.denom().to_string())),
            _ => (Value::Null, Value::Null),
        };
        let int = |s: &Option<Scalar>| match s {
            Some(Scalar::Integer(i)) => json!(i.to_string()),
            _ => Value::Null,
        };
        let (kf_num, kf_den) = frac(&self.kf);
        let (ks_num, ks_den) = frac(&self.kf_star);
        let mut obj = json!({
            "family": self.family,
            "n": self.n,
            "r": self.r,
            "deleted": self.deleted,
            "kf_num": kf_num,
            "kf_den": kf_den,
            "kf_star_num": ks_num,
            "kf_star_den": ks_den,
            "tau": int(&self.tau),
            "wiener": int(&self.wiener),
            "gutman": int(&self.gutman),
            "method": self.method.as_str(),
        });
        if self.method == crate::Method::Spectral {
            let approx = |s: &Option<Scalar>| match s {
                Some(Scalar::Approx(v)) => json!(v),
                _ => Value::Null,
            };
            obj["kf_approx"] = approx(&self.kf);
            obj["kf_star_approx"] = approx(&self.kf_star);
            if let Some(Scalar::TreeEstimate(t)) = &self.tau {
                obj["tau_ln"] = json!(t.ln);
                obj["tau_approx"] = t.rounded.map_or(Value::Null, |v| json!(v));
            }
        }
        obj
    }
}

fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n", header.join(" | "));
    s.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for row in rows {
        s.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    s
}

fn write_records(records: &[OutputRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", r.cells().join(","))?;
            }
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.json())?;
            }
        }
        Format::Markdown => {
            let header: Vec<&str> = CSV_HEADER.split(',').collect();
            let rows: Vec<Vec<String>> = records.iter().map(OutputRecord::cells).collect();
            write!(out, "{}", markdown_table(&header, &rows))?;
        }
    }
    Ok(())
}

struct Target {
    graph: Graph,
    family: String,
    family_kind: Option<Family>,
    n: usize,
    deleted: Vec<usize>,
}

fn build_target(a: &ComputeArgs) -> Result<Target, Failure> {
    if let Some(path_buf) = &a.input {
        if a.deleted.is_some() || a.r.is_some() {
            return Err(Failure::usage("--deleted/--r only apply to --family grn"));
        }
        let text = std::fs::read_to_string(path_buf)
            .map_err(|e| Failure::input(format!("{}: {e}", path_buf.display())))?;
        let graph = Graph::parse_edge_list(&text)?;
        return Ok(Target {
            n: graph.vertex_count(),
            graph,
            family: format!("file:{}", path_buf.display()),
            family_kind: None,
            deleted: Vec::new(),
        });
    }
    let (family, n) = match (a.family, a.n) {
        (Some(f), Some(n)) => (f, n),
        _ => return Err(Failure::usage("give either --family with --n, or --input")),
    };
    if family != Family::Grn && (a.deleted.is_some() || a.r.is_some()) {
        return Err(Failure::usage("--deleted/--r only apply to --family grn"));
    }
    let (graph, deleted) = match family {
        Family::Cycle => (cycle(n)?, Vec::new()),
        Family::Path => (path(n)?, Vec::new()),
        Family::Gn => (prism_family(&PrismSpec::full(n)?), Vec::new()),
        Family::Grn => {
            let deleted = match (&a.deleted, a.r) {
                (Some(d), None) => d.clone(),
                (None, Some(r)) => {
                    if n < 3 || r > n {
                        return Err(Failure::usage(format!("--r must lie in 0..={n} with n >= 3")));
                    }
                    verify::random_deletion(n, r, a.seed)
                }
                (None, None) => Vec::new(),
                (Some(_), Some(_)) => unreachable!("clap rejects --deleted with --r"),
            };
            let spec = PrismSpec::new(n, deleted)?;
            let deleted = spec.deleted().iter().copied().collect();
            (prism_family(&spec), deleted)
        }
    };
    let name = match family {
        Family::Gn => "gn",
        Family::Grn => "grn",
        Family::Cycle => "cycle",
        Family::Path => "path",
    };
    Ok(Target {
        graph,
        family: name.to_string(),
        family_kind: Some(family),
        n,
        deleted,
    })
}

fn base_record(t: &Target, method: crate::Method) -> OutputRecord {
    let r = match t.family_kind {
        Some(Family::Gn) => Some(0),
        Some(Family::Grn) => Some(t.deleted.len()),
        _ => None,
    };
    OutputRecord {
        family: t.family.clone(),
        n: t.n,
        r,
        deleted: t.deleted.clone(),
        method,
        kf: None,
        kf_star: None,
        tau: None,
        wiener: None,
        gutman: None,
    }
}

fn exact_record(t: &Target) -> Result<OutputRecord, Failure> {
    let rep = exact::full_report(&t.graph)?;
    Ok(OutputRecord {
        kf: Some(Scalar::Rational(rep.kf.value)),
        kf_star: Some(Scalar::Rational(rep.kf_star.value)),
        tau: Some(Scalar::Integer(rep.tree_count.value)),
        wiener: Some(Scalar::Integer(rep.wiener.value)),
        gutman: Some(Scalar::Integer(rep.gutman.value)),
        ..base_record(t, crate::Method::Exact)
    })
}

fn spectral_record(t: &Target) -> Result<OutputRecord, Failure> {
    if !t.graph.is_connected() {
        return Err(Error::Disconnected.into());
    }
    let rep = spectral::spectral_report(&t.graph)?;
    Ok(OutputRecord {
        kf: Some(Scalar::Approx(rep.kf)),
        kf_star: Some(Scalar::Approx(rep.kf_star)),
        tau: Some(Scalar::TreeEstimate(rep.tree_count)),
        ..base_record(t, crate::Method::Spectral)
    })
}

fn closed_form_record(t: &Target) -> Result<Option<OutputRecord>, Failure> {
    let n = t.n;
    let base = base_record(t, crate::Method::ClosedForm);
    let rec = match t.family_kind {
        Some(Family::Gn) => OutputRecord {
            kf: Some(Scalar::Rational(closed_form::kf_gn(n)?)),
            kf_star: Some(Scalar::Rational(closed_form::kf_star_gn(n)?)),
            tau: Some(Scalar::Integer(closed_form::tau_gn(n)?)),
            wiener: Some(Scalar::Integer(closed_form::wiener_gn(n)?)),
            gutman: Some(Scalar::Integer(closed_form::gutman_gn(n)?)),
            ..base
        },
        Some(Family::Grn) => {
            let r = t.deleted.len();
            OutputRecord {
                kf: Some(Scalar::Rational(closed_form::kf_grn(n, r)?)),
                tau: Some(Scalar::Integer(closed_form::tau_grn(n, r)?)),
                wiener: Some(Scalar::Integer(closed_form::wiener_grn(n, r)?)),
                ..base
            }
        }
        Some(Family::Cycle) => OutputRecord {
            kf: Some(Scalar::Rational(closed_form::kf_cycle(n)?)),
            ..base
        },
        _ => return Ok(None),
    };
    Ok(Some(rec))
}

fn as_f64(s: &Scalar) -> Option<f64> {
    match s {
        Scalar::Rational(r) => r.to_f64(),
        Scalar::Integer(i) => i.to_f64(),
        Scalar::Approx(v) => Some(*v),
        Scalar::TreeEstimate(t) => Some(t.ln.exp()),
    }
}

/// Disagreements between the exact record and another method's record.
fn disagreements(exact: &OutputRecord, other: &OutputRecord) -> Vec<String> {
    let fields = [
        ("kf", &exact.kf, &other.kf),
        ("kf_star", &exact.kf_star, &other.kf_star),
        ("tau", &exact.tau, &other.tau),
        ("wiener", &exact.wiener, &other.wiener),
        ("gutman", &exact.gutman, &other.gutman),
    ];
    let mut out = Vec::new();
    for (name, e, o) in fields {
        let (Some(e), Some(o)) = (e, o) else { continue };
        let agree = match (e, o) {
            (Scalar::Integer(x), Scalar::TreeEstimate(t)) => t.relative_error(x) <= SPECTRAL_REL_TOL,
            (_, Scalar::Approx(_)) => match (as_f64(e), as_f64(o)) {
                (Some(x), Some(y)) => (x - y).abs() <= SPECTRAL_REL_TOL * x.abs(),
                _ => false,
            },
            _ => e == o,
        };
        if !agree {
            out.push(format!(
                "{name}: exact {} vs {} {}",
                e.text(),
                other.method,
                o.text()
            ));
        }
    }
    out
}

fn compute(a: ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let target = build_target(&a)?;
    let too_big = target.graph.vertex_count() > EXACT_VERTEX_LIMIT;
    let mut method = a.method;
    if too_big && method == MethodArg::Exact {
        if closed_form_record(&target)?.is_none() {
            return Err(Failure::usage(format!(
                "exact computation is limited to {EXACT_VERTEX_LIMIT} vertices"
            )));
        }
        writeln!(err, "note: {} vertices exceeds the exact limit; using closed forms", target.graph.vertex_count())?;
        method = MethodArg::ClosedForm;
    }

    let mut records = Vec::new();
    match method {
        MethodArg::Exact => records.push(exact_record(&target)?),
        MethodArg::Spectral => records.push(spectral_record(&target)?),
        MethodArg::ClosedForm => match closed_form_record(&target)? {
            Some(r) => records.push(r),
            None => return Err(Failure::usage("no closed form for this graph")),
        },
        MethodArg::All => {
            if too_big {
                return Err(Failure::usage(format!(
                    "--method all needs the exact solver, limited to {EXACT_VERTEX_LIMIT} vertices"
                )));
            }
            records.push(exact_record(&target)?);
            records.push(spectral_record(&target)?);
            if let Some(r) = closed_form_record(&target)? {
                records.push(r);
            }
        }
    }
    write_records(&records, a.format, out)?;

    if method == MethodArg::All {
        let problems: Vec<String> = records[1..]
            .iter()
            .flat_map(|r| disagreements(&records[0], r))
            .collect();
        if !problems.is_empty() {
            for p in &problems {
                writeln!(err, "disagreement: {p}")?;
            }
            return Ok(EXIT_MISMATCH);
        }
        writeln!(err, "all methods agree")?;
    }
    Ok(EXIT_OK)
}

// ------------------------------------------------------------------ table

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Failure::usage(format!("range must look like a..b, got {text:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Failure::usage(format!("bad range bound {s:?}")))
    };
    let (lo, hi) = (parse(a)?, parse(b)?);
    if lo > hi {
        return Err(Failure::usage(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Column {
    Kf,
    Tau,
    KfStar,
    Wiener,
    Gutman,
}

impl Column {
    fn parse(s: &str) -> Result<Self, Failure> {
        Ok(match s.trim() {
            "kf" => Column::Kf,
            "tau" => Column::Tau,
            "kfstar" | "kf_star" => Column::KfStar,
            "wiener" => Column::Wiener,
            "gutman" => Column::Gutman,
            other => return Err(Failure::usage(format!("unknown column {other:?}"))),
        })
    }

    fn header(self) -> &'static str {
        match self {
            Column::Kf => "kf",
            Column::Tau => "tau",
            Column::KfStar => "kf_star",
            Column::Wiener => "wiener",
            Column::Gutman => "gutman",
        }
    }
}

fn table_cells(n: usize, columns: &[Column], method: TableMethod) -> Result<Vec<String>, Failure> {
    let mut row = vec![format!("G_{n}")];
    let exact_rep = match method {
        TableMethod::Exact => {
            if 2 * n > EXACT_VERTEX_LIMIT {
                return Err(Failure::usage(format!(
                    "exact tables are limited to {EXACT_VERTEX_LIMIT} vertices"
                )));
            }
            Some(exact::full_report(&prism_family(&PrismSpec::full(n)?))?)
        }
        TableMethod::ClosedForm => None,
    };
    for &c in columns {
        let cell = match (&exact_rep, c) {
            (None, Column::Kf) => render::decimal(&closed_form::kf_gn(n)?, 2),
            (None, Column::KfStar) => render::decimal(&closed_form::kf_star_gn(n)?, 2),
            (None, Column::Tau) => closed_form::tau_gn(n)?.to_string(),
            (None, Column::Wiener) => closed_form::wiener_gn(n)?.to_string(),
            (None, Column::Gutman) => closed_form::gutman_gn(n)?.to_string(),
            (Some(r), Column::Kf) => render::decimal(&r.kf.value, 2),
            (Some(r), Column::KfStar) => render::decimal(&r.kf_star.value, 2),
            (Some(r), Column::Tau) => r.tree_count.value.to_string(),
            (Some(r), Column::Wiener) => r.wiener.value.to_string(),
            (Some(r), Column::Gutman) => r.gutman.value.to_string(),
        };
        row.push(cell);
    }
    Ok(row)
}

fn table(a: TableArgs, out: &mut dyn Write) -> CliResult {
    let (lo, hi, columns) = match a.table {
        Some(1) => (3, 11, vec![Column::Kf, Column::Tau]),
        Some(2) => (3, 15, vec![Column::KfStar]),
        Some(t) => return Err(Failure::usage(format!("--table must be 1 or 2, got {t}"))),
        None => {
            match a.family {
                Some(Family::Gn) => {}
                Some(_) => return Err(Failure::usage("tables are available for --family gn only")),
                None => return Err(Failure::usage("give --table or --family gn --range a..b")),
            }
            let range = a.range.as_deref().ok_or_else(|| Failure::usage("--range is required"))?;
            let (lo, hi) = parse_range(range)?;
            if lo < 3 {
                return Err(Failure::usage("range must start at n >= 3"));
            }
            let columns = match &a.columns {
                Some(cs) => cs.iter().map(|c| Column::parse(c)).collect::<Result<Vec<_>, _>>()?,
                None => vec![Column::Kf, Column::Tau],
            };
            (lo, hi, columns)
        }
    };
    let mut header = vec!["G"];
    header.extend(columns.iter().map(|c| c.header()));
    let rows = (lo..=hi)
        .map(|n| table_cells(n, &columns, a.method))
        .collect::<Result<Vec<_>, _>>()?;
    match a.format {
        Format::Markdown => write!(out, "{}", markdown_table(&header, &rows))?,
        Format::Csv | Format::Json => {
            if a.format == Format::Json {
                return Err(Failure::usage("table supports csv and markdown"));
            }
            writeln!(out, "{}", header.join(","))?;
            for row in rows {
                writeln!(out, "{}", row.join(","))?;
            }
        }
    }
    Ok(EXIT_OK)
}

// ----------------------------------------------------------------- verify

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("INVKIT_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| Failure::usage(format!("INVKIT_THREADS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> CliResult {
    if a.n_max < 3 {
        return Err(Failure::usage("--n-max must be >= 3"));
    }
    if a.exhaustive_d_max > 20 {
        return Err(Failure::usage("--exhaustive-d-max above 20 is impractical"));
    }
    let config = VerifyConfig {
        n_max: a.n_max,
        exhaustive_d_max: a.exhaustive_d_max,
        seed: a.seed,
        threads: threads_from_env()?,
        sabotage: a.sabotage,
    };
    let summary = verify::run(&config)?;
    writeln!(out, "cases: {}", summary.cases)?;
    writeln!(out, "checks passed: {}", summary.passed)?;
    writeln!(out, "checks failed: {}", summary.failed)?;
    for m in &summary.mismatches {
        writeln!(
            out,
            "mismatch n={} D={:?} invariant={} expected={} got={}",
            m.n, m.deleted, m.invariant, m.expected, m.got
        )?;
    }
    Ok(if summary.all_passed() { EXIT_OK } else { EXIT_MISMATCH })
}

// ------------------------------------------------------------------ ratio

fn ratio(a: RatioArgs, out: &mut dyn Write) -> CliResult {
    let r = match (a.family, a.r) {
        (Family::Gn, None | Some(0)) => 0,
        (Family::Gn, Some(_)) => return Err(Failure::usage("--r applies to --family grn")),
        (Family::Grn, Some(r)) => r,
        (Family::Grn, None) => return Err(Failure::usage("--family grn needs --r")),
        _ => return Err(Failure::usage("ratio supports --family gn or grn")),
    };
    let ns: Vec<usize> = match (a.n, &a.n_list, &a.n_range) {
        (Some(n), None, None) => vec![n],
        (None, Some(list), None) => list.clone(),
        (None, None, Some(range)) => {
            if a.step == 0 {
                return Err(Failure::usage("--step must be positive"));
            }
            let (lo, hi) = parse_range(range)?;
            (lo..=hi).step_by(a.step).collect()
        }
        _ => return Err(Failure::usage("give one of --n, --n-list, --n-range")),
    };
    let rows = ns
        .iter()
        .map(|&n| {
            let rep = closed_form::ratio_report(n, r)?;
            Ok(vec![
                n.to_string(),
                r.to_string(),
                render::decimal(&rep.ratio, 6),
                render::decimal(&rep.deviation, 6),
            ])
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let header = ["n", "r", "ratio", "deviation"];
    match a.format {
        Format::Markdown => write!(out, "{}", markdown_table(&header, &rows))?,
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for row in rows {
                writeln!(out, "{}", row.join(","))?;
            }
        }
        Format::Json => {
            for row in rows {
                let obj = json!({"n": row[0], "r": row[1], "ratio": row[2], "deviation": row[3]});
                writeln!(out, "{obj}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

//! Command-line front end. Every subcommand writes one object (triangle,
//! series, Bernoulli family, registry or verification report) in plain, CSV
//! or JSON form.
//!
//! Exit codes: 0 success, 1 a verification or internal invariant failed,
//! 2 the command line or an expression was rejected.

mod verify;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::exprparse::{delta_from_str, ExprError};
use crate::fps::Series;
use crate::presets::{make_preset, registry, registry_json, LambdaMode, Preset, PresetError};
use crate::scalar::Rat;
use crate::stirling::{bernoulli_assoc, Associated, StirlingError};

pub use verify::{run_suites, Outcome, Status, Subject, Suite};

/// Default cap on `--order`, overridable through `DELTASERIES_MAX_ORDER`.
pub const DEFAULT_MAX_ORDER: usize = 128;
pub const MAX_ORDER_ENV: &str = "DELTASERIES_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(
    name = "deltastirling",
    version,
    about = "Stirling numbers associated with a delta series, in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Triangle of S1(n,k;f) or S2(n,k;f) for 0 <= k <= n <= --n
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::S2)]
        kind: Kind,
    },
    /// The associated logarithm f(log(1+t))
    Log {
        #[command(flatten)]
        common: Common,
        /// List n!-scaled coefficients instead of ordinary ones
        #[arg(long)]
        egf: bool,
    },
    /// Bernoulli numbers and polynomials of order alpha associated with f
    Bernoulli {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        alpha: Option<Rat>,
    },
    /// The compositional inverse of f
    Invert {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        egf: bool,
    },
    /// The series f itself
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        egf: bool,
    },
    /// Run an identity suite; exit 1 on the first failing identity
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
        /// Use this S2 triangle (JSON from `table --format json`) for the orthogonality suite
        #[arg(long)]
        s2_file: Option<PathBuf>,
        /// Use this S1 triangle for the orthogonality suite
        #[arg(long)]
        s1_file: Option<PathBuf>,
    },
    /// Preset ids with their formulas
    PresetsList {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Preset id (see presets-list); `all` is accepted by verify
    #[arg(long, conflicts_with = "f")]
    pub preset: Option<String>,
    /// Delta series as an expression in t and lambda
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Truncation order; defaults to --n
    #[arg(long)]
    pub order: Option<usize>,
    /// `symbolic` or a rational value
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    S1,
    S2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Orthogonality,
    Schloemilch,
    Theorem22,
    Lemmas,
    Logarithm,
    LambdaLimit,
    All,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invariant(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<PresetError> for Failure {
    fn from(e: PresetError) -> Self {
        match e {
            PresetError::Stirling(s) => Failure::Invariant(s.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<StirlingError> for Failure {
    fn from(e: StirlingError) -> Self {
        Failure::Invariant(e.to_string())
    }
}

type CmdResult = Result<(String, u8), Failure>;

fn max_order() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_ORDER_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

impl Common {
    /// `(n, order)` with `order` defaulting to `n` and the other way round.
    fn sizes(&self) -> Result<(usize, usize), Failure> {
        let (n, order) = match (self.n, self.order) {
            (Some(n), Some(o)) => (n, o),
            (Some(n), None) => (n, n),
            (None, Some(o)) => (o, o),
            (None, None) => return Err(Failure::Usage("give --n or --order".into())),
        };
        if n > order {
            return Err(Failure::Usage(format!("--n {n} exceeds --order {order}")));
        }
        let cap = max_order()?;
        if order > cap {
            return Err(Failure::Usage(format!("--order {order} exceeds the cap {cap} ({MAX_ORDER_ENV})")));
        }
        Ok((n, order))
    }

    fn lambda_mode(&self) -> Result<Option<LambdaMode>, Failure> {
        self.lambda.as_deref().map(|s| s.parse().map_err(|e| Failure::Usage(format!("--lambda: {e}")))).transpose()
    }

    /// The single subject named by `--preset` or `--f`.
    fn subject(&self, order: usize) -> Result<Subject, Failure> {
        let mode = self.lambda_mode()?;
        match (&self.preset, &self.f) {
            (Some(id), None) if id == "all" => Err(Failure::Usage("--preset all is only accepted by verify".into())),
            (Some(id), None) => Subject::preset(id, order, mode),
            (None, Some(src)) => Subject::expr(src, order, mode.unwrap_or_default()),
            _ => Err(Failure::Usage("give exactly one of --preset or --f".into())),
        }
    }

    fn subjects(&self, order: usize) -> Result<Vec<Subject>, Failure> {
        if self.preset.as_deref() == Some("all") && self.f.is_none() {
            let mode = self.lambda_mode()?;
            return crate::presets::corpus_ids().iter().map(|id| Subject::preset(id, order, mode.clone())).collect();
        }
        Ok(vec![self.subject(order)?])
    }
}

impl Subject {
    fn preset(id: &str, order: usize, mode: Option<LambdaMode>) -> Result<Subject, Failure> {
        let family = id.parse().map_err(Failure::from)?;
        let mode = mode.unwrap_or_else(|| crate::presets::default_mode(&family));
        let p: Preset = make_preset(id, order.max(1), mode)?;
        Ok(Subject::from_preset(p))
    }

    fn expr(src: &str, order: usize, mode: LambdaMode) -> Result<Subject, Failure> {
        let f = delta_from_str(src, order.max(1), &mode)?;
        Ok(Subject::from_series(src, f, mode))
    }
}

fn series_out(s: &Series, egf: bool, format: Format) -> String {
    let values = if egf { s.egf().to_vec() } else { s.coeffs().to_vec() };
    match format {
        Format::Json => s.to_json(egf) + "\n",
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{}", csv_cell(&v.to_string()));
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n}: {v}");
            }
            out
        }
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains(['/', ',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn run_table(c: &Common, kind: Kind) -> CmdResult {
    let (n, order) = c.sizes()?;
    let subj = c.subject(order)?;
    let ctx = Associated::new(&subj.f.truncate(n.max(1)), n)?.with_label(subj.label.clone());
    let tri = match kind {
        Kind::S1 => ctx.s1(),
        Kind::S2 => ctx.s2(),
    };
    let text = match c.format {
        Format::Plain => tri.to_plain(),
        Format::Csv => tri.to_csv(),
        Format::Json => tri.to_json() + "\n",
    };
    Ok((text, 0))
}

fn run_log(c: &Common, egf: bool) -> CmdResult {
    let (_, order) = c.sizes()?;
    let subj = c.subject(order)?;
    let ctx = Associated::new(&subj.f, order)?;
    Ok((series_out(ctx.log(), egf, c.format), 0))
}

fn run_invert(c: &Common, egf: bool) -> CmdResult {
    let (_, order) = c.sizes()?;
    let subj = c.subject(order)?;
    Ok((series_out(subj.f.invert_newton().series(), egf, c.format), 0))
}

fn run_eval(c: &Common, egf: bool) -> CmdResult {
    let (_, order) = c.sizes()?;
    let subj = c.subject(order)?;
    Ok((series_out(subj.f.series(), egf, c.format), 0))
}

#[derive(Serialize)]
struct BernoulliJson {
    f: String,
    alpha: String,
    values: Vec<String>,
    polys: Vec<Vec<String>>,
}

fn run_bernoulli(c: &Common, alpha: Option<&Rat>) -> CmdResult {
    let alpha = alpha.ok_or_else(|| Failure::Usage("bernoulli needs --alpha".into()))?;
    let (n, order) = c.sizes()?;
    // cancelling t from e^f − 1 costs one order
    let subj = c.subject(order + 1)?;
    let fam = bernoulli_assoc(&subj.f, alpha, n, true)?;
    let polys = fam.polys.expect("requested");
    let text = match c.format {
        Format::Plain => {
            let mut out = String::new();
            for (k, (v, p)) in fam.values.iter().zip(&polys).enumerate() {
                let _ = writeln!(out, "{k}: {v} | {p}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,j,value\n");
            for (k, p) in polys.iter().enumerate() {
                for j in 0..=k {
                    let _ = writeln!(out, "{k},{j},{}", csv_cell(&p.coeff(j).to_string()));
                }
            }
            out
        }
        Format::Json => {
            let w = BernoulliJson {
                f: subj.label.clone(),
                alpha: alpha.to_string(),
                values: fam.values.iter().map(ToString::to_string).collect(),
                polys: polys
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (0..=k).map(|j| p.coeff(j).to_string()).collect())
                    .collect(),
            };
            serde_json::to_string(&w).expect("plain data serializes") + "\n"
        }
    };
    Ok((text, 0))
}

fn run_presets_list(format: Format) -> String {
    match format {
        Format::Json => registry_json() + "\n",
        Format::Csv => {
            let mut out = String::from("id,letter,needs_lambda,classical_partner,expr\n");
            for e in registry() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.id,
                    e.letter,
                    e.needs_lambda,
                    e.classical_partner.as_deref().unwrap_or(""),
                    csv_cell(e.expr.unwrap_or(""))
                );
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for e in registry() {
                let _ = writeln!(out, "{:<24} ({}) {}", e.id, e.letter, e.formula);
            }
            out
        }
    }
}

fn run_verify(suite: SuiteArg, c: &Common, s2_file: Option<&PathBuf>, s1_file: Option<&PathBuf>) -> CmdResult {
    let (n, order) = c.sizes()?;
    let suites = Suite::expand(suite);
    let need = suites.iter().map(|s| s.needed(n)).max().unwrap_or(n);
    let subjects = c.subjects(order.max(need))?;
    let supplied = verify::load_supplied(s2_file, s1_file)?;
    let outcomes = run_suites(&subjects, &suites, n, supplied.as_ref());
    let failed = outcomes.iter().any(|o| o.status.is_failure());
    Ok((verify::render(&outcomes, &suites, c.format), u8::from(failed)))
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Table { common, kind } => run_table(common, *kind),
        Command::Log { common, egf } => run_log(common, *egf),
        Command::Bernoulli { common, alpha } => run_bernoulli(common, alpha.as_ref()),
        Command::Invert { common, egf } => run_invert(common, *egf),
        Command::Eval { common, egf } => run_eval(common, *egf),
        Command::Verify { suite, common, s2_file, s1_file } => {
            run_verify(*suite, common, s2_file.as_ref(), s1_file.as_ref())
        }
        Command::PresetsList { format, .. } => Ok((run_presets_list(*format), 0)),
    }
}

fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Table { common, .. }
        | Command::Log { common, .. }
        | Command::Bernoulli { common, .. }
        | Command::Invert { common, .. }
        | Command::Eval { common, .. }
        | Command::Verify { common, .. } => common.out.as_ref(),
        Command::PresetsList { out, .. } => out.as_ref(),
    }
}

/// Runs one command line, writing results to `out` (unless `--out` names a
/// file) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (text, code) = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            return f.code();
        }
    };
    let written = match out_path(&cli.command) {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 2;
    }
    code
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock()))
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.message())
    }
}

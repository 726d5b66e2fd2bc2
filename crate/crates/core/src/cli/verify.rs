//! Identity suites run by `verify`. Each suite compares two or more
//! independently computed sides and stops at the first mismatch.

use std::fmt::Write as _;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use super::{Failure, Format, SuiteArg};
use crate::fps::{DeltaSeries, Series};
use crate::presets::{default_mode, make_family, Family, LambdaMode, Preset, PresetError};
use crate::scalar::{Rat, Scalar};
use crate::stirling::{
    assoc_log_expansion, bernoulli_assoc, bernoulli_via_s2, bernoulli_via_s2_single, inverse_relations_check,
    lemma_bell_moments, lemma_bell_moments_rhs, lemma_bernoulli_bell, orthogonality_check, s1_via_bell_of_bernoulli,
    s1_via_bernoulli, s1_via_partial_bell, schloemilch_s1, Associated, OrthogonalityReport, StirlingError, Triangle,
};

/// Orders of the Bernoulli identities that are swept.
const ALPHAS: [i64; 5] = [-2, -1, 1, 2, 3];
const INVERSE_SEED: u64 = 0x5eed;
const INVERSE_TRIALS: usize = 3;

/// A delta series to verify, with the preset it came from if any.
#[derive(Debug)]
pub struct Subject {
    pub label: String,
    pub f: DeltaSeries,
    pub mode: LambdaMode,
    pub preset: Option<Preset>,
}

impl Subject {
    pub fn from_preset(p: Preset) -> Subject {
        Subject { label: p.id(), f: p.f().clone(), mode: p.lambda_mode().clone(), preset: Some(p) }
    }

    pub fn from_series(label: &str, f: DeltaSeries, mode: LambdaMode) -> Subject {
        Subject { label: label.to_string(), f, mode, preset: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Orthogonality,
    Schloemilch,
    Theorem22,
    Lemmas,
    Logarithm,
    LambdaLimit,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Orthogonality,
        Suite::Schloemilch,
        Suite::Theorem22,
        Suite::Lemmas,
        Suite::Logarithm,
        Suite::LambdaLimit,
    ];

    pub(super) fn expand(arg: SuiteArg) -> Vec<Suite> {
        match arg {
            SuiteArg::Orthogonality => vec![Suite::Orthogonality],
            SuiteArg::Schloemilch => vec![Suite::Schloemilch],
            SuiteArg::Theorem22 => vec![Suite::Theorem22],
            SuiteArg::Lemmas => vec![Suite::Lemmas],
            SuiteArg::Logarithm => vec![Suite::Logarithm],
            SuiteArg::LambdaLimit => vec![Suite::LambdaLimit],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Schloemilch => "schloemilch",
            Suite::Theorem22 => "theorem22",
            Suite::Lemmas => "lemmas",
            Suite::Logarithm => "logarithm",
            Suite::LambdaLimit => "lambda-limit",
        }
    }

    /// Largest triangle index the suite reads when checking up to `n`.
    pub fn needed(self, n: usize) -> usize {
        match self {
            Suite::Orthogonality | Suite::LambdaLimit => n,
            Suite::Schloemilch | Suite::Theorem22 => 2 * n,
            Suite::Lemmas => (2 * n).max(n + 1),
            Suite::Logarithm => (2 * n).saturating_sub(2).max(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// The suite does not apply to this subject.
    Skip(String),
    /// First failing identity.
    Fail(String),
    /// A side could not be computed.
    Error(String),
}

impl Status {
    pub fn is_failure(&self) -> bool {
        matches!(self, Status::Fail(_) | Status::Error(_))
    }

    fn cell(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Skip(_) => "n/a",
            Status::Fail(_) => "FAIL",
            Status::Error(_) => "ERROR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub subject: String,
    pub suite: Suite,
    pub max_n: usize,
    /// Scalar equalities compared before stopping.
    pub checked: usize,
    #[serde(flatten)]
    pub status: Status,
}

/// Triangles read from files that replace the computed ones in the
/// orthogonality suite.
#[derive(Debug, Default)]
pub struct Supplied {
    pub s2: Option<Triangle>,
    pub s1: Option<Triangle>,
}

fn load_triangle(path: &PathBuf) -> Result<Triangle, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Triangle::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub(super) fn load_supplied(s2: Option<&PathBuf>, s1: Option<&PathBuf>) -> Result<Option<Supplied>, Failure> {
    if s2.is_none() && s1.is_none() {
        return Ok(None);
    }
    Ok(Some(Supplied { s2: s2.map(load_triangle).transpose()?, s1: s1.map(load_triangle).transpose()? }))
}

/// Running tally for one suite: counts comparisons and records the first
/// mismatch.
struct Tally {
    checked: usize,
}

type Check = Result<(), Status>;

impl Tally {
    fn eq(&mut self, what: &str, n: usize, k: Option<usize>, got: &Scalar, expected: &Scalar) -> Check {
        self.checked += 1;
        if got == expected {
            return Ok(());
        }
        let at = match k {
            Some(k) => format!("n={n} k={k}"),
            None => format!("n={n}"),
        };
        Err(Status::Fail(format!("{what} at {at}: got {got}, expected {expected}")))
    }

    fn series(&mut self, what: &str, got: &Series, expected: &Series) -> Check {
        let len = got.order().min(expected.order());
        for n in 0..=len {
            self.eq(what, n, None, &got.egf().coeff(n), &expected.egf().coeff(n))?;
        }
        Ok(())
    }

    fn triangles(&mut self, what: &str, got: &Triangle, expected: &Triangle) -> Check {
        self.checked += got.rows().iter().map(Vec::len).sum::<usize>();
        match got.first_difference(expected) {
            None => Ok(()),
            Some((n, k)) => Err(Status::Fail(format!(
                "{what} at n={n} k={k}: got {}, expected {}",
                got.get(n, k),
                expected.get(n, k)
            ))),
        }
    }

    fn ortho(&mut self, r: OrthogonalityReport) -> Check {
        self.checked += r.checked;
        match r.failure {
            None => Ok(()),
            Some(f) => {
                let name = serde_json::to_value(f.relation).expect("unit variant");
                Err(Status::Fail(format!(
                    "{} at n={} l={}: got {}, expected {}",
                    name.as_str().unwrap_or("relation"),
                    f.n,
                    f.l,
                    f.got,
                    f.expected
                )))
            }
        }
    }
}

fn err<E: std::fmt::Display>(e: E) -> Status {
    Status::Error(e.to_string())
}

fn orthogonality(ctx: &Associated, n: usize, supplied: Option<&Supplied>, t: &mut Tally) -> Check {
    let s2 = supplied.and_then(|s| s.s2.clone()).unwrap_or_else(|| ctx.s2().truncate(n));
    let s1 = supplied.and_then(|s| s.s1.clone()).unwrap_or_else(|| ctx.s1().truncate(n));
    t.ortho(orthogonality_check(&s2, &s1))?;
    t.ortho(inverse_relations_check(&s2, &s1, INVERSE_SEED, INVERSE_TRIALS))
}

fn schloemilch(ctx: &Associated, n: usize, t: &mut Tally) -> Check {
    let s1 = ctx.s1();
    for m in 0..=n {
        for k in 0..=m {
            let v = schloemilch_s1(ctx, m, k).map_err(err)?;
            t.eq("schloemilch vs inversion", m, Some(k), &v, &s1.get(m, k))?;
        }
    }
    Ok(())
}

fn theorem22(ctx: &Associated, n: usize, t: &mut Tally) -> Check {
    let s1 = ctx.s1();
    type Side = fn(&Associated, usize, usize) -> Result<Scalar, StirlingError>;
    let sides: [(&str, Side); 4] = [
        ("bernoulli form", s1_via_bernoulli),
        ("partial Bell of S1(m,1)", s1_via_partial_bell),
        ("partial Bell of Bernoulli numbers", s1_via_bell_of_bernoulli),
        ("schloemilch", schloemilch_s1),
    ];
    for m in 0..=n {
        for k in 0..=m {
            let direct = s1.get(m, k);
            for (name, side) in &sides {
                let v = side(ctx, m, k).map_err(err)?;
                t.eq(name, m, Some(k), &v, &direct)?;
            }
        }
    }
    Ok(())
}

fn lemmas(ctx: &Associated, n: usize, t: &mut Tally) -> Check {
    for m in 0..=n {
        for k in 0..=m {
            let lhs = lemma_bell_moments(ctx, m, k).map_err(err)?;
            let rhs = lemma_bell_moments_rhs(ctx, m, k).map_err(err)?;
            t.eq("moment lemma", m, Some(k), &lhs, &rhs)?;
        }
    }
    for a in ALPHAS {
        let alpha = Rat::from(a);
        let direct = bernoulli_assoc(ctx.fbar(), &alpha, n, false).map_err(err)?.values;
        for (m, want) in direct.iter().enumerate() {
            let bell = lemma_bernoulli_bell(ctx, &alpha, m).map_err(err)?;
            t.eq(&format!("Bell form of order {a}"), m, None, &bell, want)?;
            let sum = bernoulli_via_s2(ctx, &alpha, m).map_err(err)?;
            t.eq(&format!("S2 double sum of order {a}"), m, None, &sum, want)?;
            if a == 1 {
                let single = bernoulli_via_s2_single(ctx, m).map_err(err)?;
                t.eq("S2 single sum", m, None, &single, want)?;
            }
        }
    }
    Ok(())
}

fn logarithm(ctx: &Associated, subj: &Subject, n: usize, t: &mut Tally) -> Check {
    let composed = ctx.log().truncate(n);
    let inverted = ctx.log_via_inverse().truncate(n);
    let expanded = assoc_log_expansion(ctx, n).map_err(err)?;
    t.series("inverse of exp(fbar)-1 vs composition", &inverted, &composed)?;
    t.series("S2 expansion vs composition", &expanded, &composed)?;
    if let Some(p) = &subj.preset {
        match p.oracle_log(n) {
            Ok(oracle) => t.series("closed form vs composition", &oracle, &composed)?,
            Err(PresetError::NoOracle { .. }) => {}
            Err(e) => return Err(err(e)),
        }
    }
    Ok(())
}

/// The λ = 0 specialisation of the triangles against the triangles of the
/// λ = 0 series: the classical partner for presets, the coefficient-wise
/// limit of `f` otherwise.
fn lambda_limit(ctx: &Associated, subj: &Subject, n: usize, t: &mut Tally) -> Check {
    if subj.mode != LambdaMode::Symbolic {
        return Err(Status::Skip("needs --lambda symbolic".into()));
    }
    let zero = Rat::zero();
    let limit_f = match subj.preset.as_ref().map(Preset::family) {
        Some(fam @ Family::Probabilistic(_)) => {
            make_family(fam, n.max(1), LambdaMode::Absent).map_err(err)?.f().clone()
        }
        Some(fam) => match fam.classical_partner() {
            Some(partner) => make_family(&partner, n.max(1), default_mode(&partner)).map_err(err)?.f().clone(),
            None => ctx.f().eval_lambda(&zero).map_err(err)?,
        },
        None => ctx.f().eval_lambda(&zero).map_err(err)?,
    };
    let limit = Associated::new(&limit_f, n).map_err(err)?;
    let (s2, s1) = ctx.triangles();
    let s2_0 = s2.truncate(n).eval_lambda(&zero).map_err(err)?;
    let s1_0 = s1.truncate(n).eval_lambda(&zero).map_err(err)?;
    t.triangles("S2 at lambda=0", &s2_0, limit.s2())?;
    t.triangles("S1 at lambda=0", &s1_0, limit.s1())
}

fn run_one(ctx: &Associated, subj: &Subject, suite: Suite, n: usize, supplied: Option<&Supplied>) -> Outcome {
    let mut t = Tally { checked: 0 };
    let res = match suite {
        Suite::Orthogonality => orthogonality(ctx, n, supplied, &mut t),
        Suite::Schloemilch => schloemilch(ctx, n, &mut t),
        Suite::Theorem22 => theorem22(ctx, n, &mut t),
        Suite::Lemmas => lemmas(ctx, n, &mut t),
        Suite::Logarithm => logarithm(ctx, subj, n, &mut t),
        Suite::LambdaLimit => lambda_limit(ctx, subj, n, &mut t),
    };
    Outcome {
        subject: subj.label.clone(),
        suite,
        max_n: n,
        checked: t.checked,
        status: res.err().unwrap_or(Status::Pass),
    }
}

/// Runs every suite on every subject concurrently. Results come back in
/// subject-major order regardless of scheduling.
pub fn run_suites(subjects: &[Subject], suites: &[Suite], n: usize, supplied: Option<&Supplied>) -> Vec<Outcome> {
    let need = suites.iter().map(|s| s.needed(n)).max().unwrap_or(n);
    subjects
        .par_iter()
        .flat_map_iter(|subj| {
            let ctx = match Associated::new(&subj.f, need) {
                Ok(ctx) => ctx,
                Err(e) => {
                    return suites
                        .iter()
                        .map(|&suite| Outcome {
                            subject: subj.label.clone(),
                            suite,
                            max_n: n,
                            checked: 0,
                            status: err(&e),
                        })
                        .collect::<Vec<_>>();
                }
            };
            ctx.triangles();
            suites.par_iter().map(|&suite| run_one(&ctx, subj, suite, n, supplied)).collect::<Vec<_>>()
        })
        .collect()
}

/// A pass/fail matrix (subjects by suites) followed by one line per
/// failure, or the equivalent CSV/JSON.
pub(super) fn render(outcomes: &[Outcome], suites: &[Suite], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string_pretty(outcomes).expect("plain data serializes");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("subject,suite,max_n,checked,status,detail\n");
            for o in outcomes {
                let detail = match &o.status {
                    Status::Pass => "",
                    Status::Skip(d) | Status::Fail(d) | Status::Error(d) => d,
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    super::csv_cell(&o.subject),
                    o.suite.name(),
                    o.max_n,
                    o.checked,
                    o.status.cell(),
                    super::csv_cell(detail)
                );
            }
        }
        Format::Plain => {
            let width = outcomes.iter().map(|o| o.subject.len()).max().unwrap_or(7).max(7);
            let _ = write!(out, "{:<width$}", "subject");
            for s in suites {
                let _ = write!(out, "  {:>13}", s.name());
            }
            out.push('\n');
            for row in outcomes.chunks(suites.len().max(1)) {
                let _ = write!(out, "{:<width$}", row[0].subject);
                for o in row {
                    let _ = write!(out, "  {:>13}", o.status.cell());
                }
                out.push('\n');
            }
            for o in outcomes {
                if let Status::Fail(d) | Status::Error(d) = &o.status {
                    let _ = writeln!(out, "{} {} {}: {d}", o.status.cell(), o.suite.name(), o.subject);
                }
            }
            let failed = outcomes.iter().filter(|o| o.status.is_failure()).count();
            let checked: usize = outcomes.iter().map(|o| o.checked).sum();
            let _ = writeln!(out, "{} of {} suite runs failed; {checked} equalities compared", failed, outcomes.len());
        }
    }
    out
}

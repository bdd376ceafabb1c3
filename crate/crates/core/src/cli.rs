//! Command-line front end: argument definitions, dispatch, and table/JSON rendering.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success |
//! | 2    | malformed command line |
//! | 10   | polynomial parse error |
//! | 11   | polynomial not homogeneous |
//! | 12   | input is a cone |
//! | 13   | non-isolated singularities suspected (τ routes disagree or do not stabilize) |
//! | 14   | internal assertion or theorem check violated |
//! | 15   | request not applicable to the input (dimension, degree, point, range) |
//! | 16   | i/o error |

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FieldMode, HomogeneousPoly, Rational};
use crate::corpus::{self, InstanceOutcome};
use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::report::{full_report, InputSection, InvariantsReport, InvariantsSection, ReportOptions};
use crate::syzygy::JacobianSystem;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 10;
pub const EXIT_NOT_HOMOGENEOUS: i32 = 11;
pub const EXIT_CONE: i32 = 12;
pub const EXIT_NON_ISOLATED: i32 = 13;
pub const EXIT_ASSERTION: i32 = 14;
pub const EXIT_INVALID: i32 = 15;
pub const EXIT_IO: i32 = 16;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::NotHomogeneous { .. } => EXIT_NOT_HOMOGENEOUS,
        Error::ConeInput => EXIT_CONE,
        Error::NonIsolatedOrBug { .. } | Error::ErNotStable { .. } | Error::NoStabilization { .. } => {
            EXIT_NON_ISOLATED
        }
        Error::Assertion(_) | Error::BoundViolation { .. } => EXIT_ASSERTION,
        Error::Io(_) => EXIT_IO,
        Error::DegreeTooLow(_)
        | Error::TooFewVariables(_)
        | Error::TooManyVariables(_)
        | Error::DimensionNotOne { .. }
        | Error::NotSingular(_)
        | Error::WrongDimension { .. }
        | Error::DegreeTooSmall { .. }
        | Error::OutOfRange(_)
        | Error::ModulusMismatch(..)
        | Error::UnknownInstance(_) => EXIT_INVALID,
    }
}

#[derive(Debug, Parser)]
#[command(name = "tjurina", version, about = "Jacobian syzygies and global Tjurina numbers of projective hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Debug, Args)]
pub struct InputArgs {
    /// Polynomial, e.g. "x0^5 + x1^4*x2"
    pub polynomial: Option<String>,
    /// Read the polynomial from a file instead
    #[arg(long, conflicts_with = "polynomial")]
    pub file: Option<PathBuf>,
    /// Number of variables (default: one more than the highest index used)
    #[arg(long)]
    pub nvars: Option<usize>,
    /// Highest degree of the AR/KR/ER table (default n(d-2)+1)
    #[arg(long)]
    pub cap: Option<usize>,
    /// exact, or fast (modular elimination, certified exactly)
    #[arg(long, default_value_t = FieldMode::Exact)]
    pub field: FieldMode,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every invariant and check that applies to the input
    Report {
        #[command(flatten)]
        input: InputArgs,
        /// Singular point for the witness check, e.g. 0,0,1
        #[arg(long)]
        point: Option<String>,
        /// Degree of the witness relation (default mder)
        #[arg(long)]
        a: Option<usize>,
        /// Node for the defect comparison; repeat for every singular point
        #[arg(long = "node")]
        nodes: Vec<String>,
        /// The witness point is a simple singularity
        #[arg(long)]
        simple: bool,
        /// Do not claim that f is reduced
        #[arg(long)]
        not_reduced: bool,
        /// Include wall-clock timings (makes output non-reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate the generator of ER(f)_a at a singular point
    Witness {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        point: String,
        /// The point is a simple singularity
        #[arg(long)]
        simple: bool,
    },
    /// a-versality by mder and by the defect criterion
    Versality {
        #[command(flatten)]
        input: InputArgs,
        /// Single value of a (default: all of 0..n(d-2)-1)
        #[arg(long)]
        a: Option<usize>,
    },
    /// Lower and upper Tjurina bounds in terms of mdr
    Bounds {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Freeness test for plane curves
    Free {
        #[command(flatten)]
        input: InputArgs,
        /// Do not claim that f is reduced
        #[arg(long)]
        not_reduced: bool,
    },
    /// Stability hypothesis for surfaces in P^3
    Stability {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Torelli hypothesis, d >= 4
    Torelli {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Dimensions of AR(f)_k, KR(f)_k, ER(f)_k
    Dims {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Built-in instances
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the full check suite on all (or the named) instances
    Run {
        names: Vec<String>,
        /// exact, or fast (modular elimination, certified exactly)
        #[arg(long, default_value_t = FieldMode::Exact)]
        field: FieldMode,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Parses `a,b,c` into exact coordinates.
pub fn parse_point(text: &str) -> Result<Vec<Rational>> {
    let mut offset = 0;
    text.split(',')
        .map(|part| {
            let at = offset + (part.len() - part.trim_start().len());
            offset += part.len() + 1;
            Rational::from_str(part.trim()).map_err(|_| Error::Parse {
                position: at,
                message: format!("`{}` is not an integer or p/q", part.trim()),
            })
        })
        .collect()
}

impl InputArgs {
    pub fn poly(&self) -> Result<HomogeneousPoly> {
        let text = match (&self.polynomial, &self.file) {
            (Some(t), _) => t.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
            (None, None) => return Err(Error::OutOfRange("no polynomial given".into())),
        };
        parse_poly(text.trim(), self.nvars)
    }

    fn options(&self) -> ReportOptions {
        ReportOptions {
            mode: self.field,
            cap: self.cap,
            reduced_claim: true,
            ..ReportOptions::default()
        }
    }

    fn report(&self, adjust: impl FnOnce(&mut ReportOptions) -> Result<()>) -> Result<InvariantsReport> {
        let f = self.poly()?;
        let mut opts = self.options();
        adjust(&mut opts)?;
        full_report(&f, &opts)
    }
}

/// Output of the single-check subcommands in JSON form.
#[derive(Serialize)]
struct CheckOutput<'a, T: Serialize> {
    input: &'a InputSection,
    invariants: &'a InvariantsSection,
    result: T,
}

fn emit_json<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string_pretty(value).expect("report serializes"));
    out.push('\n');
}

fn emit_check<T: Serialize>(
    out: &mut String,
    format: Format,
    report: &InvariantsReport,
    result: &T,
    table: impl FnOnce(&mut String),
) {
    match format {
        Format::Json => emit_json(
            out,
            &CheckOutput {
                input: &report.input,
                invariants: &report.invariants,
                result,
            },
        ),
        Format::Table => {
            render_header(out, report);
            table(out);
        }
    }
}

/// Runs one command, appending everything meant for stdout to `out`; returns the exit
/// code on success.
pub fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Report {
            input,
            point,
            a,
            nodes,
            simple,
            not_reduced,
            timings,
        } => {
            let report = input.report(|o| {
                o.witness_point = point.as_deref().map(parse_point).transpose()?;
                o.witness_a = *a;
                o.non_simple_claim = point.is_some() && !simple;
                o.nodes = nodes.iter().map(|p| parse_point(p)).collect::<Result<_>>()?;
                o.reduced_claim = !not_reduced;
                o.timings = *timings;
                Ok(())
            })?;
            match input.format {
                Format::Json => emit_json(out, &report),
                Format::Table => render_report(out, &report),
            }
        }
        Command::Witness { input, a, point, simple } => {
            let report = input.report(|o| {
                o.witness_point = Some(parse_point(point)?);
                o.witness_a = Some(*a);
                o.non_simple_claim = !simple;
                Ok(())
            })?;
            let v = report.verdicts.topological_witness.as_ref().expect("witness requested");
            emit_check(out, input.format, &report, v, |s| render_witness(s, v));
        }
        Command::Versality { input, a } => {
            let report = input.report(|_| Ok(()))?;
            let selected: Vec<_> = match a {
                Some(a) => vec![report
                    .verdicts
                    .versality
                    .get(*a)
                    .cloned()
                    .ok_or_else(|| Error::OutOfRange(format!("a = {a} outside 0..n(d-2)-1")))?],
                None => report.verdicts.versality.clone(),
            };
            emit_check(out, input.format, &report, &selected, |s| {
                for v in &selected {
                    render_versality(s, v);
                }
            });
        }
        Command::Bounds { input } => {
            let report = input.report(|_| Ok(()))?;
            emit_check(out, input.format, &report, &report.bounds, |s| render_bounds(s, &report));
        }
        Command::Free { input, not_reduced } => {
            let report = input.report(|o| {
                o.reduced_claim = !not_reduced;
                Ok(())
            })?;
            let v = report.verdicts.free_curve.as_ref().ok_or(Error::WrongDimension {
                expected: 2,
                found: report.input.n,
            })?;
            emit_check(out, input.format, &report, v, |s| {
                let _ = writeln!(
                    s,
                    "free curve      {}  (tau = {}, (d-1)^2 - r(d-r-1) = {}, reduced claim {})",
                    yes_no(v.holds),
                    v.details.tau,
                    v.details.upper_bound,
                    yes_no(v.details.reduced_claim)
                );
            });
        }
        Command::Stability { input } => {
            let report = input.report(|_| Ok(()))?;
            let v = report.verdicts.stability.as_ref().ok_or(Error::WrongDimension {
                expected: 3,
                found: report.input.n,
            })?;
            emit_check(out, input.format, &report, v, |s| render_stability(s, v));
        }
        Command::Torelli { input } => {
            let report = input.report(|_| Ok(()))?;
            let v = report.verdicts.torelli.as_ref().ok_or(Error::DegreeTooSmall {
                min: 4,
                found: report.input.d,
            })?;
            emit_check(out, input.format, &report, v, |s| render_torelli(s, v));
        }
        Command::Dims { input } => {
            let sys = JacobianSystem::new(input.poly()?, input.field)?;
            let cap = input.cap.unwrap_or(sys.stable_degree() + 1);
            let dims = sys.graded_dims(cap)?;
            match input.format {
                Format::Json => emit_json(out, &dims),
                Format::Table => {
                    let _ = writeln!(out, "polynomial      {}", sys.poly());
                    let _ = writeln!(out, "n, d            {}, {}", sys.n(), sys.d());
                    render_dims(out, &dims.pieces);
                }
            }
        }
        Command::Corpus { action } => return run_corpus(action, out),
    }
    Ok(EXIT_OK)
}

fn run_corpus(action: &CorpusAction, out: &mut String) -> Result<i32> {
    match action {
        CorpusAction::List { format } => {
            #[derive(Serialize)]
            struct Entry {
                name: &'static str,
                polynomial: &'static str,
                description: &'static str,
            }
            let entries: Vec<Entry> = corpus::corpus()
                .iter()
                .map(|i| Entry {
                    name: i.name,
                    polynomial: i.polynomial,
                    description: i.description,
                })
                .collect();
            match format {
                Format::Json => emit_json(out, &entries),
                Format::Table => {
                    for e in &entries {
                        let _ = writeln!(out, "{:<24} {:<48} {}", e.name, e.polynomial, e.description);
                    }
                }
            }
            Ok(EXIT_OK)
        }
        CorpusAction::Run { names, field, format } => {
            let instances = if names.is_empty() {
                corpus::corpus().iter().collect()
            } else {
                names.iter().map(|n| corpus::instance(n)).collect::<Result<Vec<_>>>()?
            };
            let outcomes: Vec<InstanceOutcome> = instances
                .par_iter()
                .map(|i| corpus::run_instance(i, *field))
                .collect();
            match format {
                Format::Json => emit_json(out, &outcomes),
                Format::Table => render_outcomes(out, &outcomes),
            }
            Ok(if outcomes.iter().all(InstanceOutcome::passed) {
                EXIT_OK
            } else {
                EXIT_ASSERTION
            })
        }
    }
}

/// Parses the process arguments, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(code) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(e) => {
            let _ = stdout.write_all(out.as_bytes());
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn render_header(out: &mut String, r: &InvariantsReport) {
    let _ = writeln!(out, "polynomial      {}", r.input.polynomial);
    let _ = writeln!(out, "n, d            {}, {}", r.input.n, r.input.d);
    let _ = writeln!(out, "field           {}", r.input.field);
    let _ = writeln!(out, "mdr             {}", r.invariants.mdr);
    let _ = writeln!(out, "mder            {}", opt(r.invariants.mder));
    let _ = writeln!(out, "tau             {}", r.invariants.tau);
}

fn render_dims(out: &mut String, pieces: &[crate::syzygy::GradedPiece]) {
    let _ = writeln!(out, "\n{:>4} {:>8} {:>8} {:>8}", "k", "AR", "KR", "ER");
    for p in pieces {
        let _ = writeln!(out, "{:>4} {:>8} {:>8} {:>8}", p.k, p.ar, p.kr, p.er);
    }
}

fn render_bounds(out: &mut String, r: &InvariantsReport) {
    let b = &r.bounds;
    let mut attained = Vec::new();
    if b.attain_lower {
        attained.push("lower attained");
    }
    if b.attain_upper {
        attained.push("upper attained");
    }
    let note = if !b.asserted {
        " (smooth: not asserted)".to_string()
    } else if attained.is_empty() {
        String::new()
    } else {
        format!(" ({})", attained.join(", "))
    };
    let _ = writeln!(out, "bounds          {} <= tau <= {}  [r = {}]{note}", b.lower, b.upper, b.r);
}

fn render_versality(out: &mut String, v: &crate::invariants::Verdict<crate::invariants::VersalityDetails>) {
    let d = &v.details;
    let _ = writeln!(
        out,
        "versality a={:<3} {}  (defect_{} = {})",
        d.a,
        if v.holds { "versal" } else { "non-versal" },
        d.defect_degree,
        d.defect
    );
}

fn render_witness(out: &mut String, v: &crate::invariants::Verdict<crate::invariants::WitnessDetails>) {
    let d = &v.details;
    let _ = writeln!(out, "witness degree  {}", d.a);
    let _ = writeln!(out, "point           ({})", d.point);
    let _ = writeln!(out, "rho             {}", d.representative);
    let _ = writeln!(out, "rho(p)          ({})", d.evaluation.join(", "));
    let verdict = match (d.nonzero, d.non_simple_claim) {
        (true, true) => format!("topologically {}-versal", d.a),
        (true, false) => "rho(p) != 0, but the point is not claimed non-simple".to_string(),
        (false, _) => "rho(p) = 0, no conclusion".to_string(),
    };
    let _ = writeln!(out, "verdict         {verdict}");
}

fn render_stability(out: &mut String, v: &crate::invariants::Verdict<crate::invariants::StabilityDetails>) {
    let d = &v.details;
    let _ = writeln!(
        out,
        "stability       {}  (d' = {}, eps = {}, tau = {} < {}?, dim AR(f)_{} = {}, c1 = {})",
        if v.holds { "holds" } else { "fails" },
        d.d_prime,
        d.epsilon,
        d.tau,
        d.threshold,
        d.d_prime,
        d.ar_dim_at_d_prime,
        d.c1
    );
    if let Some(c) = &d.conclusion {
        let _ = writeln!(out, "                {c}");
    }
}

fn render_torelli(out: &mut String, v: &crate::invariants::Verdict<crate::invariants::TorelliDetails>) {
    let d = &v.details;
    let _ = writeln!(
        out,
        "torelli         {}  (m = {}, tau = {} {} {}, mdr = {})",
        if v.holds { "holds" } else { "fails" },
        d.m,
        d.tau,
        if (d.tau as u64) < d.threshold { "<" } else { ">=" },
        d.threshold,
        d.mdr
    );
    if let Some(c) = &d.conclusion {
        let _ = writeln!(out, "                {c}");
    }
}

fn render_report(out: &mut String, r: &InvariantsReport) {
    render_header(out, r);
    render_bounds(out, r);
    render_dims(out, &r.tables.graded_dims);
    if !r.tables.defects.is_empty() {
        let _ = writeln!(out, "\n{:>4} {:>8}", "m", "defect");
        for e in &r.tables.defects {
            let _ = writeln!(out, "{:>4} {:>8}", e.k, e.defect);
        }
    }
    let _ = writeln!(out);
    let v = &r.verdicts;
    for x in &v.versality {
        render_versality(out, x);
    }
    if let Some(t) = &v.t_smoothness {
        let _ = writeln!(
            out,
            "T-smooth        {}  ({})",
            yes_no(t.holds),
            t.details.condition
        );
    }
    if let Some(i) = &v.mder_tau_inequality {
        let _ = writeln!(
            out,
            "mder > n(d-2)-tau  {}  ({} > {})",
            yes_no(i.holds),
            i.details.mder,
            i.details.rhs
        );
    }
    if let Some(f) = &v.free_curve {
        let _ = writeln!(out, "free curve      {}", yes_no(f.holds));
    }
    if let Some(s) = &v.stability {
        render_stability(out, s);
    }
    if let Some(t) = &v.torelli {
        render_torelli(out, t);
    }
    if let Some(w) = &v.topological_witness {
        let _ = writeln!(out);
        render_witness(out, w);
    }
    if let Some(dd) = &v.defect_duality {
        let _ = writeln!(out, "\ndefect duality  {}", yes_no(dd.holds));
        let _ = writeln!(out, "{:>4} {:>8} {:>12}", "k", "ER", "node defect");
        for row in &dd.details.rows {
            let _ = writeln!(out, "{:>4} {:>8} {:>12}", row.k, row.er, row.nodal_defect);
        }
    }
    if let Some(t) = &r.timings {
        let _ = writeln!(out);
        for (k, secs) in t {
            let _ = writeln!(out, "time {k:<10} {secs:.3}s");
        }
    }
}

fn render_outcomes(out: &mut String, outcomes: &[InstanceOutcome]) {
    for o in outcomes {
        let summary = o.report.as_ref().map_or(String::new(), |r| {
            format!(
                "tau={} mdr={} mder={}",
                r.invariants.tau,
                r.invariants.mdr,
                opt(r.invariants.mder)
            )
        });
        let _ = writeln!(
            out,
            "{:<24} {:<4} {}",
            o.name,
            if o.passed() { "ok" } else { "FAIL" },
            summary
        );
        for c in &o.checks {
            let _ = writeln!(out, "    {:<22} {:<4} {}", c.name, if c.passed { "ok" } else { "FAIL" }, c.detail);
        }
        if let Some(e) = &o.error {
            let _ = writeln!(out, "    error: {e}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let _ = writeln!(out, "\n{} instances, {} failed", outcomes.len(), failed);
}

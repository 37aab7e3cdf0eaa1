//! Library behind the `mannheim-lab` binary.
//!
//! Exit codes: `0` on success, `1` when any report fails, `2` on usage,
//! parse or evaluation errors.

pub mod output;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mannheim_core::curve::{Curve, DEFAULT_VALIDATION_GRID};
use mannheim_core::expr::Expr;
use mannheim_core::frenet::{frame_kind_along, frenet_apparatus, FrameKind, FrenetFrame};
use mannheim_core::indicatrix::{indicatrix_of, indicatrix_relations, FrenetField};
use mannheim_core::lorentz::Vec3L;
use mannheim_core::mannheim::{
    classify_pair, offset_along_binormal, offset_along_normal, MannheimPair, Tolerances, VerificationReport, Verifier,
};
use serde::Serialize;

use output::{emit, num, to_json, FrameJson, PairJson};
use spec::{parse_expr_arg, parse_range, Builtin, CurveSpec, SynthSpec, DEFAULT_STEP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable selecting the floating-point mode.
pub const FP_MODE_VAR: &str = "MANNHEIM_LAB_FP_MODE";

#[derive(Parser, Debug)]
#[command(name = "mannheim-lab", version, about = "Curves and Mannheim partners in Minkowski 3-space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArg {
    /// paper-example-1, paper-example-2, csv:<path>, <path>.csv or synth:kind=..;kappa=..;tau=..
    #[arg(short = 'c', long = "curve", alias = "c")]
    pub curve: CurveSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OffsetDirection {
    /// `α* + λB*`
    Binormal,
    /// `α − λN`
    Normal,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Causal character and frame kind of a curve, and the pair type when a partner is given.
    Classify {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        cstar: Option<CurveSpec>,
        #[arg(long, default_value_t = DEFAULT_VALIDATION_GRID)]
        grid: usize,
    },
    /// Frenet frame, curvature and torsion at one parameter or over a grid.
    Frenet {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<f64>,
        #[arg(long, default_value_t = 11)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Samples of the offset curve as CSV.
    Offset {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, value_enum, default_value_t = OffsetDirection::Binormal)]
        field: OffsetDirection,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrates the Frenet equations for prescribed curvature and torsion; writes CSV.
    Synthesize {
        #[arg(long)]
        kind: FrameKind,
        #[arg(long, value_parser = parse_expr_arg, allow_hyphen_values = true)]
        kappa: Expr,
        #[arg(long, value_parser = parse_expr_arg, allow_hyphen_values = true)]
        tau: Expr,
        #[arg(long, value_parser = parse_range, default_value = "0,1", allow_hyphen_values = true)]
        range: (f64, f64),
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Residual reports for every pair identity.
    PairVerify {
        /// The Mannheim curve; its partner is `α − λN` unless `--cstar` is given.
        #[arg(short = 'c', long = "curve", alias = "c")]
        curve: Option<CurveSpec>,
        /// The partner curve; the Mannheim curve is `α* + λB*` unless `--curve` is given.
        #[arg(long)]
        cstar: Option<CurveSpec>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// One tolerance for every judged identity.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Samples of a spherical indicatrix as CSV.
    Indicatrix {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value = "N")]
        field: FrenetField,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in example curves.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Writes curve.csv, and offset.csv when `--lambda` is given, into a directory.
    ExportPlot {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExamplesAction {
    /// Names and closed forms of the built-in curves.
    List,
    /// Pair report for a built-in partner curve.
    Run {
        number: u8,
        #[arg(long, default_value_t = 20.0, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ClassifyJson {
    curve: String,
    character: String,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cstar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cstar_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair_type: Option<u8>,
}

#[derive(Serialize)]
struct ExampleJson {
    number: u8,
    name: &'static str,
    description: &'static str,
}

/// Runs the command line and returns the exit code; the floating-point mode
/// is read from the environment.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mode = std::env::var(FP_MODE_VAR).ok();
    run_with_fp_mode(args, mode.as_deref(), stdout, stderr)
}

pub fn run_with_fp_mode<I, T>(args: I, fp_mode: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    // Arithmetic never fuses multiply-add, so `strict` is the only mode.
    if let Some(mode) = fp_mode.filter(|m| !m.is_empty() && *m != "strict") {
        let _ = writeln!(stderr, "error: {FP_MODE_VAR}={mode} is not supported (expected strict)");
        return EXIT_ERROR;
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(VerificationReport::is_fail) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn check_grid(n: usize) -> Result<usize> {
    if n < 2 {
        bail!("--grid must be at least 2, got {n}");
    }
    Ok(n)
}

fn frames_json(c: &Curve, name: &str, at: Option<f64>, grid: usize) -> Result<String> {
    let frame = |s: f64| -> Result<FrameJson> {
        let f: FrenetFrame = frenet_apparatus(c, s)?;
        Ok(FrameJson::new(name, s, &f))
    };
    Ok(match at {
        Some(s) => to_json(&frame(s)?),
        None => to_json(&c.grid(check_grid(grid)?).into_iter().map(frame).collect::<Result<Vec<_>>>()?),
    })
}

/// Builds the pair from whichever curves are given.
pub fn build_pair(curve: Option<&Curve>, cstar: Option<&Curve>, lambda: f64) -> Result<MannheimPair> {
    Ok(match (curve, cstar) {
        (Some(c), Some(cs)) => MannheimPair::from_curves(c, cs, lambda)?,
        (Some(c), None) => MannheimPair::from_curve(c, lambda)?,
        (None, Some(cs)) => MannheimPair::from_partner(cs, lambda)?,
        (None, None) => bail!("pair-verify needs --curve, --cstar or both"),
    })
}

/// Every report for `pair`, preceded by the collinearity residual.
pub fn pair_report(pair: &MannheimPair, grid: usize, tol: &Tolerances, example: Option<u8>) -> Result<PairJson> {
    let v = Verifier::new(pair, check_grid(grid)?)?;
    let mut reports = v.all(tol)?;
    if !reports.iter().any(|r| r.identity == mannheim_core::mannheim::INDICATRIX_CURVATURE) {
        reports.extend(indicatrix_relations(&v, tol)?.reports);
    }
    Ok(PairJson {
        example,
        pair_type: pair.pair_type.number(),
        lambda: num(pair.lambda),
        hypothesis_residual: num(v.hypothesis_residual()),
        reports,
    })
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Classify { curve, cstar, grid } => {
            let c = curve.curve.build()?;
            let grid = check_grid(grid)?;
            let character = c.classify(grid)?;
            let kind = frame_kind_along(&c, grid)?;
            let mut out = ClassifyJson {
                curve: c.label().to_string(),
                character: character.to_string(),
                kind: kind.to_string(),
                cstar: None,
                cstar_kind: None,
                pair_type: None,
            };
            if let Some(spec) = cstar {
                let cs = spec.build()?;
                out.cstar_kind = Some(frame_kind_along(&cs, grid)?.to_string());
                out.pair_type = Some(classify_pair(&c, &cs)?.number());
                out.cstar = Some(cs.label().to_string());
            }
            emit(&(to_json(&out) + "\n"), None, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Frenet { curve, at, grid, out } => {
            let c = curve.curve.build()?;
            let text = frames_json(&c, c.label(), at, grid)?;
            emit(&(text + "\n"), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Offset { curve, lambda, field, grid, out } => {
            let c = curve.curve.build()?;
            let off = match field {
                OffsetDirection::Binormal => offset_along_binormal(&c, lambda)?,
                OffsetDirection::Normal => offset_along_normal(&c, lambda)?,
            };
            emit(&output::csv(&off.sample(check_grid(grid)?)?)?, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Synthesize { kind, kappa, tau, range, step, grid, out } => {
            if !(step > 0.0 && step.is_finite()) {
                bail!("--step must be positive, got {step}");
            }
            let spec = SynthSpec { kind, kappa, tau, frame0: FrenetFrame::standard(kind), p0: Vec3L::ZERO, range, step };
            let c = spec.build()?;
            emit(&output::csv(&c.sample(check_grid(grid)?)?)?, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::PairVerify { curve, cstar, lambda, grid, tol, out } => {
            let c = curve.map(|s| s.build()).transpose()?;
            let cs = cstar.map(|s| s.build()).transpose()?;
            let pair = build_pair(c.as_ref(), cs.as_ref(), lambda)?;
            let tol = match tol {
                Some(t) if t > 0.0 && t.is_finite() => Tolerances::uniform(t),
                Some(t) => bail!("--tol must be positive, got {t}"),
                None => Tolerances::default(),
            };
            let report = pair_report(&pair, grid, &tol, None)?;
            emit(&(to_json(&report) + "\n"), out.as_deref(), stdout)?;
            Ok(exit_code(&report.reports))
        }
        Command::Indicatrix { curve, field, grid, out } => {
            let c = curve.curve.build()?;
            let ind = indicatrix_of(&c, field)?;
            emit(&output::csv(&ind.sample(check_grid(grid)?)?)?, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Examples { action: ExamplesAction::List } => {
            let list: Vec<ExampleJson> = Builtin::ALL
                .into_iter()
                .map(|b| ExampleJson { number: b.number(), name: b.name(), description: b.description() })
                .collect();
            emit(&(to_json(&list) + "\n"), None, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Examples { action: ExamplesAction::Run { number, lambda, grid, out } } => {
            let Some(b) = Builtin::from_number(number) else { bail!("no built-in example {number} (expected 1 or 2)") };
            let pair = MannheimPair::from_partner(&b.curve(), lambda)?;
            let report = pair_report(&pair, grid, &Tolerances::default(), Some(number))?;
            emit(&(to_json(&report) + "\n"), out.as_deref(), stdout)?;
            Ok(exit_code(&report.reports))
        }
        Command::ExportPlot { curve, lambda, grid, out } => {
            let c = curve.curve.build()?;
            let grid = check_grid(grid)?;
            std::fs::create_dir_all(&out)?;
            write_file(&out.join("curve.csv"), &output::csv(&c.sample(grid)?)?)?;
            if let Some(lambda) = lambda {
                let off = offset_along_binormal(&c, lambda)?;
                write_file(&out.join("offset.csv"), &output::csv(&off.sample(grid)?)?)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    emit(text, Some(path), &mut std::io::sink())
}

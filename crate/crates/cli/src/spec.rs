//! Curve specifications accepted on the command line.
//!
//! ```text
//! paper-example-1 | paper-example-2
//! csv:<path> | <path>.csv
//! synth:kind=<kind>;kappa=<expr>;tau=<expr>[;range=a,b][;step=h][;p0=x,y,z][;frame0=t1,t2,t3,n1,n2,n3]
//! ```

use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use mannheim_core::builtin::{spacelike_hyperbolic_helix, timelike_hyperbolic_helix};
use mannheim_core::curve::{Curve, CurveSamples};
use mannheim_core::expr::{parse_expr, Expr};
use mannheim_core::frenet::{frenet_synthesize, FrameKind, FrenetFrame, INITIAL_FRAME_TOLERANCE};
use mannheim_core::lorentz::Vec3L;

pub const DEFAULT_STEP: f64 = 1e-3;
pub const DEFAULT_RANGE: (f64, f64) = (0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Spacelike helix with timelike binormal.
    Example1,
    /// Timelike helix.
    Example2,
}

impl Builtin {
    pub const ALL: [Builtin; 2] = [Builtin::Example1, Builtin::Example2];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Example1 => "paper-example-1",
            Builtin::Example2 => "paper-example-2",
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Builtin::Example1 => 1,
            Builtin::Example2 => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.number() == n)
    }

    pub fn description(self) -> &'static str {
        match self {
            Builtin::Example1 => "spacelike helix (-sinh(s)/2, cosh(s)/2, s*sqrt(5)/2), kappa 1/2, tau sqrt(5)/2",
            Builtin::Example2 => "timelike helix (2*sinh(s), 2*cosh(s), s*sqrt(3)), kappa 2, tau sqrt(3)",
        }
    }

    pub fn curve(self) -> Curve {
        match self {
            Builtin::Example1 => spacelike_hyperbolic_helix(),
            Builtin::Example2 => timelike_hyperbolic_helix(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynthSpec {
    pub kind: FrameKind,
    pub kappa: Expr,
    pub tau: Expr,
    pub frame0: FrenetFrame,
    pub p0: Vec3L,
    pub range: (f64, f64),
    pub step: f64,
}

impl SynthSpec {
    pub fn build(&self) -> Result<Curve> {
        Ok(frenet_synthesize(self.kind, self.kappa.clone(), self.tau.clone(), &self.frame0, self.p0, self.range, self.step)?)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurveSpec {
    Builtin(Builtin),
    Samples(PathBuf),
    Synthesized(SynthSpec),
}

impl CurveSpec {
    pub fn build(&self) -> Result<Curve> {
        match self {
            CurveSpec::Builtin(b) => Ok(b.curve()),
            CurveSpec::Samples(path) => {
                let samples = CurveSamples::read_csv_path(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(Curve::from_samples(&samples, path.display().to_string())?)
            }
            CurveSpec::Synthesized(s) => s.build(),
        }
    }
}

fn floats(text: &str, n: usize, what: &str) -> Result<Vec<f64>> {
    let v = text
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| anyhow!("{what}: '{x}' is not a number")))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != n || v.iter().any(|x| !x.is_finite()) {
        bail!("{what}: expected {n} finite comma-separated numbers, got '{text}'");
    }
    Ok(v)
}

pub fn parse_range(text: &str) -> Result<(f64, f64)> {
    let v = floats(text, 2, "range")?;
    if v[0] >= v[1] {
        bail!("range: start must be below end, got '{text}'");
    }
    Ok((v[0], v[1]))
}

pub fn parse_expr_arg(text: &str) -> Result<Expr> {
    parse_expr(text).map_err(|e| anyhow!("in expression '{text}': {e}"))
}

fn parse_synth(body: &str) -> Result<SynthSpec> {
    let (mut kind, mut kappa, mut tau) = (None, None, None);
    let (mut range, mut step, mut p0, mut frame) = (DEFAULT_RANGE, DEFAULT_STEP, Vec3L::ZERO, None);
    for item in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| anyhow!("synth: expected key=value, got '{item}'"))?;
        let value = value.trim();
        match key.trim() {
            "kind" => kind = Some(value.parse::<FrameKind>()?),
            "kappa" => kappa = Some(parse_expr_arg(value)?),
            "tau" => tau = Some(parse_expr_arg(value)?),
            "range" => range = parse_range(value)?,
            "step" => {
                step = value.parse().map_err(|_| anyhow!("synth: step '{value}' is not a number"))?;
                if !(step > 0.0 && f64::is_finite(step)) {
                    bail!("synth: step must be positive");
                }
            }
            "p0" => p0 = Vec3L::from_array(floats(value, 3, "p0")?.try_into().expect("three values")),
            "frame0" => frame = Some(floats(value, 6, "frame0")?),
            other => bail!("synth: unknown key '{other}'"),
        }
    }
    let kind = kind.ok_or_else(|| anyhow!("synth: missing kind"))?;
    let frame0 = match frame {
        None => FrenetFrame::standard(kind),
        Some(v) => {
            let f = FrenetFrame::from_tangent_normal(kind, Vec3L::new(v[0], v[1], v[2]), Vec3L::new(v[3], v[4], v[5]));
            f.validate(INITIAL_FRAME_TOLERANCE)?;
            f
        }
    };
    Ok(SynthSpec {
        kind,
        kappa: kappa.ok_or_else(|| anyhow!("synth: missing kappa"))?,
        tau: tau.ok_or_else(|| anyhow!("synth: missing tau"))?,
        frame0,
        p0,
        range,
        step,
    })
}

impl FromStr for CurveSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(b) = Builtin::ALL.into_iter().find(|b| b.name() == s) {
            return Ok(CurveSpec::Builtin(b));
        }
        if let Some(path) = s.strip_prefix("csv:") {
            return Ok(CurveSpec::Samples(PathBuf::from(path)));
        }
        if let Some(body) = s.strip_prefix("synth:") {
            return Ok(CurveSpec::Synthesized(parse_synth(body)?));
        }
        if s.to_ascii_lowercase().ends_with(".csv") {
            return Ok(CurveSpec::Samples(PathBuf::from(s)));
        }
        bail!("unrecognized curve '{s}' (expected paper-example-1, paper-example-2, csv:<path> or synth:...)")
    }
}

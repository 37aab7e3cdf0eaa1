//! JSON and CSV emission with 17 significant digits.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use mannheim_core::curve::{fmt_f64, CurveSamples};
use mannheim_core::frenet::FrenetFrame;
use mannheim_core::lorentz::Vec3L;
use mannheim_core::mannheim::VerificationReport;
use serde::Serialize;
use serde_json::value::RawValue;

/// JSON number, or `null` when not finite.
pub fn num(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() { fmt_f64(v) } else { "null".into() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

pub fn vec3(v: Vec3L) -> Box<RawValue> {
    let [a, b, c] = v.to_array().map(|x| num(x).get().to_string());
    RawValue::from_string(format!("[{a},{b},{c}]")).expect("valid JSON array")
}

#[derive(Serialize)]
pub struct FrameJson {
    pub curve: String,
    pub s: Box<RawValue>,
    pub kind: String,
    #[serde(rename = "T")]
    pub t: Box<RawValue>,
    #[serde(rename = "N")]
    pub n: Box<RawValue>,
    #[serde(rename = "B")]
    pub b: Box<RawValue>,
    pub kappa: Box<RawValue>,
    pub tau: Box<RawValue>,
}

impl FrameJson {
    pub fn new(curve: &str, s: f64, f: &FrenetFrame) -> Self {
        FrameJson {
            curve: curve.to_string(),
            s: num(s),
            kind: f.kind.to_string(),
            t: vec3(f.t),
            n: vec3(f.n),
            b: vec3(f.b),
            kappa: num(f.kappa),
            tau: num(f.tau),
        }
    }
}

#[derive(Serialize)]
pub struct PairJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<u8>,
    pub pair_type: u8,
    pub lambda: Box<RawValue>,
    /// Largest collinearity residual over the grid.
    pub hypothesis_residual: Box<RawValue>,
    pub reports: Vec<VerificationReport>,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

/// Writes `text` to `path`, or to `stdout` when no path is given.
pub fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

pub fn csv(samples: &CurveSamples) -> Result<String> {
    let mut buf = Vec::new();
    samples.write_csv(&mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is ASCII"))
}

//! Per-identity residual reports and their JSON form.

use serde::de::Deserializer;
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    /// Residuals published without a pass/fail claim.
    Reported,
}

/// Residual statistics of one identity over a parameter grid.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub grid: Vec<f64>,
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub note: Option<String>,
}

impl VerificationReport {
    /// Judged report: `Pass` iff every residual is finite and the maximum is
    /// within `tolerance`.
    pub fn judged(identity: impl Into<String>, grid: Vec<f64>, residuals: Vec<f64>, tolerance: f64) -> Self {
        let mut r = Self::reported(identity, grid, residuals, tolerance);
        r.verdict = if r.max_residual <= tolerance { Verdict::Pass } else { Verdict::Fail };
        r
    }

    pub fn reported(identity: impl Into<String>, grid: Vec<f64>, residuals: Vec<f64>, tolerance: f64) -> Self {
        let (max_residual, mean_residual) = stats(&residuals);
        VerificationReport {
            identity: identity.into(),
            grid,
            residuals,
            max_residual,
            mean_residual,
            tolerance,
            verdict: Verdict::Reported,
            note: None,
        }
    }

    /// Judged when `judge` holds, reported otherwise.
    pub fn conditional(identity: impl Into<String>, grid: Vec<f64>, residuals: Vec<f64>, tolerance: f64, judge: bool) -> Self {
        if judge {
            Self::judged(identity, grid, residuals, tolerance)
        } else {
            Self::reported(identity, grid, residuals, tolerance)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Max and mean; a non-finite residual makes the max NaN.
fn stats(r: &[f64]) -> (f64, f64) {
    if r.is_empty() {
        return (0.0, 0.0);
    }
    if r.iter().any(|v| !v.is_finite()) {
        return (f64::NAN, f64::NAN);
    }
    let max = r.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (max, r.iter().sum::<f64>() / r.len() as f64)
}

/// JSON number with 17 significant digits, `null` when not finite.
pub(crate) fn raw_number(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() { format!("{v:.16e}") } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

/// Float array with 17 significant digits per element.
pub(crate) fn raw_numbers(v: &[f64]) -> Box<RawValue> {
    let body: Vec<String> = v.iter().map(|x| raw_number(*x).get().to_string()).collect();
    RawValue::from_string(format!("[{}]", body.join(","))).expect("valid JSON array")
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 8)?;
        st.serialize_field("identity", &self.identity)?;
        st.serialize_field("grid", &raw_numbers(&self.grid))?;
        st.serialize_field("residuals", &raw_numbers(&self.residuals))?;
        st.serialize_field("max_residual", &raw_number(self.max_residual))?;
        st.serialize_field("mean_residual", &raw_number(self.mean_residual))?;
        st.serialize_field("tolerance", &raw_number(self.tolerance))?;
        st.serialize_field("verdict", &self.verdict)?;
        if let Some(n) = &self.note {
            st.serialize_field("note", n)?;
        } else {
            st.skip_field("note")?;
        }
        st.end()
    }
}

#[derive(Deserialize)]
struct ReportRepr {
    identity: String,
    grid: Vec<Option<f64>>,
    residuals: Vec<Option<f64>>,
    max_residual: Option<f64>,
    mean_residual: Option<f64>,
    tolerance: Option<f64>,
    verdict: Verdict,
    #[serde(default)]
    note: Option<String>,
}

impl<'de> Deserialize<'de> for VerificationReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ReportRepr::deserialize(d)?;
        let nan = |v: Option<f64>| v.unwrap_or(f64::NAN);
        Ok(VerificationReport {
            identity: r.identity,
            grid: r.grid.into_iter().map(nan).collect(),
            residuals: r.residuals.into_iter().map(nan).collect(),
            max_residual: nan(r.max_residual),
            mean_residual: nan(r.mean_residual),
            tolerance: nan(r.tolerance),
            verdict: r.verdict,
            note: r.note,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_follow_the_maximum() {
        let r = VerificationReport::judged("x", vec![0.0, 1.0], vec![1e-7, 3e-6], 1e-5);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.max_residual, 3e-6);
        let r = VerificationReport::judged("x", vec![0.0, 1.0], vec![1e-7, 3e-4], 1e-5);
        assert_eq!(r.verdict, Verdict::Fail);
        let r = VerificationReport::judged("x", vec![0.0], vec![f64::NAN], 1e-5);
        assert_eq!(r.verdict, Verdict::Fail);
        let r = VerificationReport::conditional("x", vec![0.0], vec![1.0], 1e-5, false);
        assert_eq!(r.verdict, Verdict::Reported);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let r = VerificationReport::judged("partner-distance", vec![0.0, 0.1, 1.0 / 3.0], vec![1e-17, 2.0f64.sqrt(), 0.0], 1e-9)
            .with_note("example");
        let text = r.to_json();
        assert!(text.contains("1.4142135623730951e0"));
        let back = VerificationReport::from_json(&text).unwrap();
        assert_eq!(back, r);

        let inf = VerificationReport::reported("x", vec![0.0], vec![f64::INFINITY], 1.0);
        let v: serde_json::Value = serde_json::from_str(&inf.to_json()).unwrap();
        assert!(v["residuals"][0].is_null());
        assert!(v.get("note").is_none());
    }
}

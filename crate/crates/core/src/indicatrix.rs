//! Spherical indicatrices of the Frenet fields on the Lorentzian sphere
//! `⟨x, x⟩ = 1` or the hyperbolic sphere `⟨x, x⟩ = −1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curve::{Curve, CurveSamples};
use crate::error::{GeometryError, Result};
use crate::frenet::{frenet_jets, FrameJets};
use crate::lorentz::{inner, JetVec, Vec3L};
use crate::mannheim::{identities, Tolerances, VerificationReport, Verifier, INDICATRIX_CURVATURE, INDICATRIX_TORSION};
use crate::numeric::{adaptive_simpson, DEFAULT_QUAD_TOLERANCE};

/// Rates at or below this are degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrenetField {
    T,
    N,
    B,
}

impl FrenetField {
    fn pick(self, j: &FrameJets) -> JetVec {
        match self {
            FrenetField::T => j.t,
            FrenetField::N => j.n,
            FrenetField::B => j.b,
        }
    }
}

impl fmt::Display for FrenetField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrenetField::T => "T",
            FrenetField::N => "N",
            FrenetField::B => "B",
        })
    }
}

impl FromStr for FrenetField {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T" | "TANGENT" => Ok(FrenetField::T),
            "N" | "NORMAL" => Ok(FrenetField::N),
            "B" | "BINORMAL" => Ok(FrenetField::B),
            other => Err(GeometryError::InvalidArgument(format!("unknown Frenet field '{other}' (expected T, N or B)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SphereKind {
    /// `⟨x, x⟩ = 1`.
    Lorentzian,
    /// `⟨x, x⟩ = −1`.
    Hyperbolic,
}

impl SphereKind {
    pub fn radius_sign(self) -> f64 {
        match self {
            SphereKind::Lorentzian => 1.0,
            SphereKind::Hyperbolic => -1.0,
        }
    }
}

/// The curve traced by one unit Frenet field of a unit-speed curve.
#[derive(Clone)]
pub struct Indicatrix {
    base: Curve,
    source: FrenetField,
    sphere: SphereKind,
}

impl fmt::Debug for Indicatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Indicatrix")
            .field("base", &self.base.label())
            .field("source", &self.source)
            .field("sphere", &self.sphere)
            .finish()
    }
}

/// Indicatrix of field `which` along `c`; the field's causal character must
/// not change on the validation grid.
pub fn indicatrix_of(c: &Curve, which: FrenetField) -> Result<Indicatrix> {
    let mut sphere = None;
    for s in c.grid(17) {
        let v = which.pick(&frenet_jets(c, s)?).value();
        let k = if inner(v, v) > 0.0 { SphereKind::Lorentzian } else { SphereKind::Hyperbolic };
        match sphere {
            None => sphere = Some(k),
            Some(prev) if prev != k => return Err(GeometryError::MixedCausalCharacter { t: s }),
            _ => {}
        }
    }
    Ok(Indicatrix { base: c.clone(), source: which, sphere: sphere.expect("grid is non-empty") })
}

impl Indicatrix {
    pub fn base(&self) -> &Curve {
        &self.base
    }

    pub fn source(&self) -> FrenetField {
        self.source
    }

    pub fn sphere(&self) -> SphereKind {
        self.sphere
    }

    fn field(&self, s: f64) -> Result<(FrameJets, JetVec)> {
        let j = frenet_jets(&self.base, s)?;
        Ok((j, self.source.pick(&j)))
    }

    pub fn point(&self, s: f64) -> Result<Vec3L> {
        Ok(self.field(s)?.1.value())
    }

    /// `|γ′(s)|` from the derivative of the field's expansion.
    pub fn rate(&self, s: f64) -> Result<f64> {
        Ok(self.field(s)?.1.derivative(1).norm())
    }

    /// `|γ′(s)|` from the Frenet equations with the curve's `κ`, `τ`.
    pub fn frenet_rate(&self, s: f64) -> Result<f64> {
        let (j, _) = self.field(s)?;
        let f = j.frame();
        let d = f.derivatives();
        let v = match self.source {
            FrenetField::T => d[0],
            FrenetField::N => d[1],
            FrenetField::B => d[2],
        };
        Ok(v.norm())
    }

    /// `γ′/|γ′|`.
    pub fn tangent(&self, s: f64) -> Result<Vec3L> {
        let d = self.field(s)?.1.derivative(1);
        let rate = d.norm();
        if !(rate > DEGENERACY_TOLERANCE) {
            return Err(GeometryError::DegenerateIndicatrix { s, rate });
        }
        Ok((1.0 / rate) * d)
    }

    /// Arc length of the indicatrix between base parameters `s0` and `s1`.
    pub fn arclength(&self, s0: f64, s1: f64) -> Result<f64> {
        adaptive_simpson(|s| self.rate(s), s0, s1, DEFAULT_QUAD_TOLERANCE)
    }

    /// Largest `|⟨γ, γ⟩ ∓ 1|` over a grid.
    pub fn sphere_residual(&self, grid_size: usize) -> Result<f64> {
        let sign = self.sphere.radius_sign();
        let mut worst = 0f64;
        for s in self.base.grid(grid_size) {
            let p = self.point(s)?;
            worst = worst.max((inner(p, p) - sign).abs());
        }
        Ok(worst)
    }

    /// Points on a uniform grid of base parameters, in the curve CSV layout.
    pub fn sample(&self, n: usize) -> Result<CurveSamples> {
        let parameters = self.base.grid(n);
        let points = parameters.iter().map(|&s| self.point(s)).collect::<Result<Vec<_>>>()?;
        Ok(CurveSamples { parameters, points, frames: None })
    }
}

pub fn indicatrix_tangent(c: &Curve, which: FrenetField, s: f64) -> Result<Vec3L> {
    indicatrix_of(c, which)?.tangent(s)
}

/// Indicatrix relation reports and the alignment sign between the tangents
/// of the `N` indicatrix of `C` and the `B` indicatrix of `C*`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicatrixRelations {
    pub sign: f64,
    pub reports: Vec<VerificationReport>,
}

/// Residuals `|κ·ds/ds₂ − σ·f₁|` and `|τ·ds/ds₂ − σ·f₂|`, with `ds/ds₂` and
/// `ds*/ds₃*` the reciprocal indicatrix rates and `σ = ±1` the sign that
/// minimizes the largest residual over the grid.
pub fn indicatrix_relations(v: &Verifier<'_>, tol: &Tolerances) -> Result<IndicatrixRelations> {
    for p in v.points() {
        if !(p.rate_n > tol.degeneracy) {
            return Err(GeometryError::DegenerateIndicatrix { s: p.s, rate: p.rate_n });
        }
        if !(p.rate_bstar > tol.degeneracy) {
            return Err(GeometryError::DegenerateIndicatrix { s: p.s_star, rate: p.rate_bstar });
        }
    }
    let inputs = v.inputs()?;
    let terms: Vec<(f64, f64, f64, f64)> = v
        .points()
        .iter()
        .zip(&inputs)
        .map(|(p, d)| {
            let r = 1.0 / p.rate_n;
            let (f1, f2) = identities::indicatrix_rhs(d, 1.0 / p.rate_bstar);
            (d.kappa * r, d.tau * r, f1, f2)
        })
        .collect();
    let residuals = |sign: f64| -> (Vec<f64>, Vec<f64>) {
        terms.iter().map(|&(a, b, f1, f2)| ((a - sign * f1).abs(), (b - sign * f2).abs())).unzip()
    };
    let worst = |r: &(Vec<f64>, Vec<f64>)| r.0.iter().chain(&r.1).copied().fold(0.0, f64::max);
    let (plus, minus) = (residuals(1.0), residuals(-1.0));
    let (sign, (rk, rt)) = if worst(&minus) < worst(&plus) { (-1.0, minus) } else { (1.0, plus) };
    let judge = v.hypothesis_holds(tol);
    let note = format!("alignment sign {sign:+}");
    let grid = v.grid().to_vec();
    Ok(IndicatrixRelations {
        sign,
        reports: vec![
            VerificationReport::conditional(INDICATRIX_CURVATURE, grid.clone(), rk, tol.indicatrix, judge).with_note(note.clone()),
            VerificationReport::conditional(INDICATRIX_TORSION, grid, rt, tol.indicatrix, judge).with_note(note),
        ],
    })
}

pub fn verify_indicatrix_relations(pair: &crate::mannheim::MannheimPair, grid: usize) -> Result<IndicatrixRelations> {
    indicatrix_relations(&Verifier::new(pair, grid)?, &Tolerances::default())
}

//! Mannheim pairs: construction, type classification and the collinearity
//! residual of the principal normal of `C` with the binormal of `C*`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::offset::{offset_along_binormal, offset_along_normal};
use super::theta::{decompose_tangent, ThetaDecomposition};
use crate::curve::{ArcLengthMap, Curve, DEFAULT_TABLE_SIZE, DEFAULT_UNIT_SPEED_TOLERANCE, DEFAULT_VALIDATION_GRID};
use crate::error::{GeometryError, Result};
use crate::frenet::{frame_kind_along, frenet_jets, FrameJets, FrameKind};
use crate::lorentz::{cross, norm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MannheimPairType {
    /// `C*` timelike; `C` spacelike with timelike normal.
    Type1,
    /// `C*` and `C` timelike.
    Type2,
    /// `C*` spacelike with timelike binormal; `C` spacelike with timelike normal.
    Type3,
    /// `C*` spacelike with timelike binormal; `C` timelike.
    Type4,
    /// `C*` spacelike with timelike normal; `C` spacelike with timelike binormal.
    Type5,
}

impl MannheimPairType {
    pub const ALL: [MannheimPairType; 5] = [
        MannheimPairType::Type1,
        MannheimPairType::Type2,
        MannheimPairType::Type3,
        MannheimPairType::Type4,
        MannheimPairType::Type5,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get((n as usize).checked_sub(1)?).copied()
    }

    /// Type from the frame kinds of `C` and `C*`.
    pub fn from_kinds(c: FrameKind, cstar: FrameKind) -> Option<Self> {
        use FrameKind::*;
        Some(match (cstar, c) {
            (TimelikeCurve, SpacelikeCurveEpsMinus) => MannheimPairType::Type1,
            (TimelikeCurve, TimelikeCurve) => MannheimPairType::Type2,
            (SpacelikeCurveEpsPlus, SpacelikeCurveEpsMinus) => MannheimPairType::Type3,
            (SpacelikeCurveEpsPlus, TimelikeCurve) => MannheimPairType::Type4,
            (SpacelikeCurveEpsMinus, SpacelikeCurveEpsPlus) => MannheimPairType::Type5,
            _ => return None,
        })
    }

    /// Sign in `τ²(κ² ∓ τ²)/κ²`: `−1` for types 1 to 4, `+1` for type 5.
    pub fn condition_sign(self) -> f64 {
        if self == MannheimPairType::Type5 {
            1.0
        } else {
            -1.0
        }
    }
}

impl fmt::Display for MannheimPairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {}", self.number())
    }
}

/// Map from the arc length `s` of `C` to the arc length `s*` of `C*`
/// through a shared construction parameter `t`.
#[derive(Clone, Debug, Default)]
pub struct Correspondence {
    /// `s ↦ t`; identity when absent.
    c_map: Option<Arc<ArcLengthMap>>,
    /// `t ↦ s*`; identity when absent.
    cstar_map: Option<Arc<ArcLengthMap>>,
}

impl Correspondence {
    pub fn identity() -> Self {
        Correspondence::default()
    }

    /// Both curves are arc-length reparametrizations (or the identity) of
    /// curves sharing one parameter.
    pub fn shared_parameter(c_map: Option<Arc<ArcLengthMap>>, cstar_map: Option<Arc<ArcLengthMap>>) -> Self {
        Correspondence { c_map, cstar_map }
    }

    /// Shared construction parameter of `s`.
    pub fn shared(&self, s: f64) -> Result<f64> {
        match &self.c_map {
            Some(m) => m.param_at(s),
            None => Ok(s),
        }
    }

    /// `s*(s)`.
    pub fn map(&self, s: f64) -> Result<f64> {
        let t = self.shared(s)?;
        match &self.cstar_map {
            Some(m) => m.arclength_at(t),
            None => Ok(t),
        }
    }

    /// `ds*/ds`.
    pub fn rate(&self, s: f64) -> Result<f64> {
        let t = self.shared(s)?;
        let v_c = match &self.c_map {
            Some(m) => m.speed_at(t)?,
            None => 1.0,
        };
        let v_star = match &self.cstar_map {
            Some(m) => m.speed_at(t)?,
            None => 1.0,
        };
        Ok(v_star / v_c)
    }
}

#[derive(Clone, Debug)]
pub struct MannheimPair {
    /// The Mannheim curve, unit-speed.
    pub c: Curve,
    /// The partner curve, unit-speed.
    pub cstar: Curve,
    pub lambda: f64,
    pub correspondence: Correspondence,
    pub pair_type: MannheimPairType,
}

impl MannheimPair {
    /// Pairs two unit-speed curves; the type is read from their frames.
    pub fn new(c: Curve, cstar: Curve, lambda: f64, correspondence: Correspondence) -> Result<Self> {
        if lambda == 0.0 {
            return Err(GeometryError::ZeroLambda);
        }
        let c = c.into_unit_speed(DEFAULT_VALIDATION_GRID, DEFAULT_UNIT_SPEED_TOLERANCE)?;
        let cstar = cstar.into_unit_speed(DEFAULT_VALIDATION_GRID, DEFAULT_UNIT_SPEED_TOLERANCE)?;
        let pair_type = classify_pair(&c, &cstar)?;
        Ok(MannheimPair { c, cstar, lambda, correspondence, pair_type })
    }

    /// `C` as the arc-length reparametrization of `α* + λB*`.
    pub fn from_partner(cstar: &Curve, lambda: f64) -> Result<Self> {
        Self::from_partner_with(cstar, lambda, DEFAULT_TABLE_SIZE)
    }

    pub fn from_partner_with(cstar: &Curve, lambda: f64, table_size: usize) -> Result<Self> {
        let alpha = offset_along_binormal(cstar, lambda)?;
        let c = alpha.reparametrize_unit(table_size)?;
        let corr = Correspondence::shared_parameter(c.arclength_map().cloned(), None);
        MannheimPair::new(c, cstar.clone(), lambda, corr)
    }

    /// `C*` as the arc-length reparametrization of `α − λN`.
    pub fn from_curve(c: &Curve, lambda: f64) -> Result<Self> {
        Self::from_curve_with(c, lambda, DEFAULT_TABLE_SIZE)
    }

    pub fn from_curve_with(c: &Curve, lambda: f64, table_size: usize) -> Result<Self> {
        let alpha_star = offset_along_normal(c, lambda)?;
        let cstar = alpha_star.reparametrize_unit(table_size)?;
        let corr = Correspondence::shared_parameter(None, cstar.arclength_map().cloned());
        MannheimPair::new(c.clone(), cstar, lambda, corr)
    }

    /// Pairs two curves sharing one parameter; either is reparametrized by
    /// arc length unless it is already unit-speed.
    pub fn from_curves(c: &Curve, cstar: &Curve, lambda: f64) -> Result<Self> {
        if c.domain() != cstar.domain() {
            return Err(GeometryError::InvalidArgument(format!(
                "curves must share a parameter domain, got {:?} and {:?}",
                c.domain(),
                cstar.domain()
            )));
        }
        let unit = |x: &Curve| -> Result<Curve> {
            if x.is_unit_speed() || x.unit_speed_deviation(DEFAULT_VALIDATION_GRID)? <= DEFAULT_UNIT_SPEED_TOLERANCE {
                Ok(x.clone().assume_unit_speed())
            } else {
                x.reparametrize_unit(DEFAULT_TABLE_SIZE)
            }
        };
        let (c, cstar) = (unit(c)?, unit(cstar)?);
        let corr = Correspondence::shared_parameter(c.arclength_map().cloned(), cstar.arclength_map().cloned());
        MannheimPair::new(c, cstar, lambda, corr)
    }

    pub fn corresponding(&self, s: f64) -> Result<f64> {
        self.correspondence.map(s)
    }

    /// Frame expansions of `C` at `s` and of `C*` at `s*(s)`.
    pub fn frames(&self, s: f64) -> Result<(FrameJets, FrameJets)> {
        let fc = frenet_jets(&self.c, s)?;
        let fs = frenet_jets(&self.cstar, self.corresponding(s)?)?;
        Ok((fc, fs))
    }

    /// Grid of `n` points on the domain of `C`.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        self.c.grid(n)
    }
}

/// Pair type from the causal characters of both curves and their frames.
pub fn classify_pair(c: &Curve, cstar: &Curve) -> Result<MannheimPairType> {
    let kind = |curve: &Curve| match frame_kind_along(curve, 5) {
        Err(GeometryError::NullTangent { .. }) | Err(GeometryError::NullPrincipalNormal { .. }) => Err(
            GeometryError::UnsupportedCombination(format!("{} is null or has a null normal", curve.label())),
        ),
        other => other,
    };
    let (kc, ks) = (kind(c)?, kind(cstar)?);
    MannheimPairType::from_kinds(kc, ks).ok_or_else(|| {
        GeometryError::UnsupportedCombination(format!("C is a {kc} curve and C* a {ks} curve"))
    })
}

/// Normalized `|N_C ∧ B*|`, zero exactly when the normal line of `C` and the
/// binormal line of `C*` are parallel.
pub fn mannheim_residual(pair: &MannheimPair, s: f64) -> Result<f64> {
    let (fc, fs) = pair.frames(s)?;
    Ok(collinearity(&fc, &fs))
}

pub(crate) fn collinearity(fc: &FrameJets, fs: &FrameJets) -> f64 {
    let (n, b) = (fc.n.value(), fs.b.value());
    norm(cross(n, b)) / (norm(n) * norm(b))
}

/// Largest [`mannheim_residual`] over a uniform grid.
pub fn max_mannheim_residual(pair: &MannheimPair, grid: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for s in pair.grid(grid) {
        worst = worst.max(mannheim_residual(pair, s)?);
    }
    Ok(worst)
}

/// Signed angle between `T` and the `(T*, N*)` plane at `s`.
pub fn theta(pair: &MannheimPair, s: f64) -> Result<f64> {
    Ok(theta_decomposition(pair, s)?.theta)
}

pub fn theta_decomposition(pair: &MannheimPair, s: f64) -> Result<ThetaDecomposition> {
    let (fc, fs) = pair.frames(s)?;
    decompose_tangent(fc.t.value(), fs.t.value(), fs.n.value(), s)
}

/// Outcome of [`mannheim_curve_test`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveTest {
    pub constant: bool,
    pub lambda_estimate: f64,
    pub grid: Vec<f64>,
    pub profile: Vec<f64>,
}

/// Evaluates `m = τ²(κ² ∓ τ²)/κ²` along `c`; a Mannheim curve of the given
/// type would need `m ≡ 1/λ²`.
pub fn mannheim_curve_test(c: &Curve, pair_type: MannheimPairType, grid: usize) -> Result<CurveTest> {
    let sign = pair_type.condition_sign();
    let points = c.grid(grid.max(2));
    let mut profile = Vec::with_capacity(points.len());
    for &s in &points {
        let f = frenet_jets(c, s)?.frame();
        if f.tau.abs() <= 1e-12 {
            return Err(GeometryError::VanishingTorsion { s });
        }
        let (k2, t2) = (f.kappa * f.kappa, f.tau * f.tau);
        let m = t2 * (k2 + sign * t2) / k2;
        if !(m > 0.0) {
            return Err(GeometryError::NegativeConditionValue { s, value: m });
        }
        profile.push(m);
    }
    let max = profile.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = profile.iter().copied().fold(f64::INFINITY, f64::min);
    let mean = profile.iter().sum::<f64>() / profile.len() as f64;
    Ok(CurveTest {
        constant: max - min <= 1e-6 * mean.abs(),
        lambda_estimate: 1.0 / mean.sqrt(),
        grid: points,
        profile,
    })
}

/// `(a, b)` in the collinearity condition `κ = λ(aκ² + bτ²)` for a curve of
/// the given kind, obtained by requiring `N` to stay normal to the partner's
/// osculating plane.
pub fn collinearity_coefficients(kind: FrameKind) -> (f64, f64) {
    match kind {
        FrameKind::TimelikeCurve => (1.0, -1.0),
        k => (-k.epsilon(), 1.0),
    }
}

/// Pointwise `λ` for which `α − λN` has `N` as binormal direction at `s`:
/// `κ / (aκ² + bτ²)`.
pub fn collinearity_lambda(c: &Curve, s: f64) -> Result<f64> {
    let f = frenet_jets(c, s)?.frame();
    let (a, b) = collinearity_coefficients(f.kind);
    Ok(f.kappa / (a * f.kappa * f.kappa + b * f.tau * f.tau))
}

/// Residuals `|κ − λ(aκ² + bτ²)|` over a grid.
pub fn collinearity_condition(c: &Curve, lambda: f64, grid: usize) -> Result<Vec<f64>> {
    c.grid(grid.max(2))
        .into_iter()
        .map(|s| {
            let f = frenet_jets(c, s)?.frame();
            let (a, b) = collinearity_coefficients(f.kind);
            Ok((f.kappa - lambda * (a * f.kappa * f.kappa + b * f.tau * f.tau)).abs())
        })
        .collect()
}

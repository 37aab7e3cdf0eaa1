//! Frenet apparatus of unit-speed timelike and spacelike curves, and curve
//! synthesis from prescribed curvature and torsion.
//!
//! Conventions: `T = α′`, `κ = |T′|`, `N = T′/κ`, `B = T ∧ N`, `ε = ⟨N, N⟩`
//! for spacelike curves. The frame then satisfies
//!
//! ```text
//! timelike curve:   T′ = κN,  N′ =   κT + τB,  B′ = −τN
//! spacelike curve:  T′ = κN,  N′ = −εκT + τB,  B′ =  τN
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::curve::{Curve, CurveMap, DEFAULT_UNIT_SPEED_TOLERANCE};
use crate::error::{GeometryError, Result};
use crate::expr::Expr;
use crate::jet::{Jet, MAX_ORDER};
use crate::lorentz::{causal_character, cross, inner, CausalCharacter, JetVec, Vec3L};

/// Curvature at or below this value is treated as zero.
pub const DEFAULT_CURVATURE_TOLERANCE: f64 = 1e-9;

/// Gram tolerance for initial frames handed to the integrator.
pub const INITIAL_FRAME_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrameKind {
    TimelikeCurve,
    /// Spacelike curve with spacelike normal and timelike binormal (`ε = +1`).
    SpacelikeCurveEpsPlus,
    /// Spacelike curve with timelike normal (`ε = −1`).
    SpacelikeCurveEpsMinus,
}

impl FrameKind {
    pub const ALL: [FrameKind; 3] =
        [FrameKind::TimelikeCurve, FrameKind::SpacelikeCurveEpsPlus, FrameKind::SpacelikeCurveEpsMinus];

    /// `⟨N, N⟩`.
    pub fn epsilon(self) -> f64 {
        match self {
            FrameKind::SpacelikeCurveEpsMinus => -1.0,
            _ => 1.0,
        }
    }

    /// `(⟨T, T⟩, ⟨N, N⟩, ⟨B, B⟩)`.
    pub fn signature(self) -> [f64; 3] {
        match self {
            FrameKind::TimelikeCurve => [-1.0, 1.0, 1.0],
            FrameKind::SpacelikeCurveEpsPlus => [1.0, 1.0, -1.0],
            FrameKind::SpacelikeCurveEpsMinus => [1.0, -1.0, 1.0],
        }
    }

    pub fn is_timelike(self) -> bool {
        self == FrameKind::TimelikeCurve
    }

    /// Kind from the causal characters of `T` and `N`.
    pub fn from_characters(t: CausalCharacter, n: CausalCharacter) -> Option<FrameKind> {
        use CausalCharacter::*;
        match (t, n) {
            (Timelike, Spacelike) => Some(FrameKind::TimelikeCurve),
            (Spacelike, Spacelike) => Some(FrameKind::SpacelikeCurveEpsPlus),
            (Spacelike, Timelike) => Some(FrameKind::SpacelikeCurveEpsMinus),
            _ => None,
        }
    }

    /// Coefficients `(a, b)` with `N′ = aκT + τB` and `B′ = bτN`.
    fn structure(self) -> (f64, f64) {
        match self {
            FrameKind::TimelikeCurve => (1.0, -1.0),
            k => (-k.epsilon(), 1.0),
        }
    }
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameKind::TimelikeCurve => "timelike",
            FrameKind::SpacelikeCurveEpsPlus => "spacelike+",
            FrameKind::SpacelikeCurveEpsMinus => "spacelike-",
        })
    }
}

impl FromStr for FrameKind {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "timelike" => Ok(FrameKind::TimelikeCurve),
            "spacelike+" => Ok(FrameKind::SpacelikeCurveEpsPlus),
            "spacelike-" => Ok(FrameKind::SpacelikeCurveEpsMinus),
            _ => Err(GeometryError::InvalidArgument(format!(
                "unknown curve kind '{s}' (expected timelike, spacelike+ or spacelike-)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrenetFrame {
    #[serde(rename = "T")]
    pub t: Vec3L,
    #[serde(rename = "N")]
    pub n: Vec3L,
    #[serde(rename = "B")]
    pub b: Vec3L,
    pub kappa: f64,
    pub tau: f64,
    pub kind: FrameKind,
}

impl FrenetFrame {
    /// Frame from `T` and `N` with `B = T ∧ N`; curvatures left at zero.
    pub fn from_tangent_normal(kind: FrameKind, t: Vec3L, n: Vec3L) -> Self {
        FrenetFrame { t, n, b: cross(t, n), kappa: 0.0, tau: 0.0, kind }
    }

    /// Coordinate frame of the given kind: timelike `T = e1, N = e2`;
    /// `ε = +1` `T = e2, N = e3`; `ε = −1` `T = e2, N = e1`.
    pub fn standard(kind: FrameKind) -> Self {
        let (t, n) = match kind {
            FrameKind::TimelikeCurve => (Vec3L::E1, Vec3L::E2),
            FrameKind::SpacelikeCurveEpsPlus => (Vec3L::E2, Vec3L::E3),
            FrameKind::SpacelikeCurveEpsMinus => (Vec3L::E2, Vec3L::E1),
        };
        FrenetFrame::from_tangent_normal(kind, t, n)
    }

    pub fn vectors(&self) -> [Vec3L; 3] {
        [self.t, self.n, self.b]
    }

    /// Largest deviation of the Gram matrix from the kind's signature.
    pub fn gram_residual(&self) -> f64 {
        gram_residual(self.kind, &self.vectors())
    }

    /// Componentwise deviation of `B` from `T ∧ N`.
    pub fn cross_residual(&self) -> f64 {
        (self.b - cross(self.t, self.n)).max_abs()
    }

    /// Checks the Gram invariants and `B = T ∧ N` within `tol`.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let g = self.gram_residual();
        if !(g <= tol) {
            return Err(GeometryError::InvalidInitialFrame(format!(
                "Gram residual {g:e} exceeds {tol:e} for a {} frame",
                self.kind
            )));
        }
        let c = self.cross_residual();
        if !(c <= tol) {
            return Err(GeometryError::InvalidInitialFrame(format!("B differs from T ∧ N by {c:e}")));
        }
        Ok(())
    }

    /// `(T′, N′, B′)` predicted by the Frenet system from this frame's scalars.
    pub fn derivatives(&self) -> [Vec3L; 3] {
        let (a, b) = self.kind.structure();
        [
            self.kappa * self.n,
            a * self.kappa * self.t + self.tau * self.b,
            b * self.tau * self.n,
        ]
    }
}

fn gram_residual(kind: FrameKind, v: &[Vec3L; 3]) -> f64 {
    let sig = kind.signature();
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in i..3 {
            let expect = if i == j { sig[i] } else { 0.0 };
            worst = worst.max((inner(v[i], v[j]) - expect).abs());
        }
    }
    worst
}

/// Frame fields, curvature and torsion expanded around one parameter value.
///
/// Orders valid in each field: `T` to `m − 1`, `N`, `B`, `κ` to `m − 2` and
/// `τ` to `m − 3`, where `m` is the order of the position expansion.
#[derive(Clone, Copy, Debug)]
pub struct FrameJets {
    pub kind: FrameKind,
    pub t: JetVec,
    pub n: JetVec,
    pub b: JetVec,
    pub kappa: Jet,
    pub tau: Jet,
}

impl FrameJets {
    pub fn frame(&self) -> FrenetFrame {
        FrenetFrame {
            t: self.t.value(),
            n: self.n.value(),
            b: self.b.value(),
            kappa: self.kappa.value(),
            tau: self.tau.value(),
            kind: self.kind,
        }
    }
}

/// Frame expansions from a position expansion of a unit-speed curve at `s`.
pub fn frame_jets(alpha: &JetVec, s: f64, curvature_tol: f64) -> Result<FrameJets> {
    let t = alpha.differentiate();
    let t0 = t.value();
    let t_char = causal_character(t0);
    if matches!(t_char, CausalCharacter::Null | CausalCharacter::Zero) {
        return Err(GeometryError::NullTangent { t: s });
    }
    let raw = t.differentiate();
    // remove the tangential part left by a parametrization that is unit speed only numerically
    let tangential = raw.inner(&t) / t.inner(&t);
    let tp = raw - t.scale(tangential);
    let tp0 = tp.value();
    let euclid = (tp0.x1 * tp0.x1 + tp0.x2 * tp0.x2 + tp0.x3 * tp0.x3).sqrt();
    if euclid <= curvature_tol {
        return Err(GeometryError::VanishingCurvature { s, kappa: tp0.norm() });
    }
    let q = tp.inner(&tp);
    let kappa0 = q.value().abs().sqrt();
    if kappa0 <= curvature_tol || q.value().abs() <= 1e-9 * euclid * euclid {
        return Err(GeometryError::NullPrincipalNormal { s });
    }
    let kappa = q.abs().sqrt();
    let n = tp.scale(kappa.recip());
    let kind = FrameKind::from_characters(t_char, causal_character(n.value()))
        .ok_or(GeometryError::NullPrincipalNormal { s })?;
    let b = t.cross(&n);
    let np = n.differentiate();
    let tau = match kind {
        FrameKind::TimelikeCurve => np.inner(&b),
        k => np.inner(&b).scale(-k.epsilon()),
    };
    Ok(FrameJets { kind, t, n, b, kappa, tau })
}

fn require_unit_speed(c: &Curve, s: f64) -> Result<()> {
    if c.is_unit_speed() {
        return Ok(());
    }
    let v = c.speed(s)?;
    if (v - 1.0).abs() > DEFAULT_UNIT_SPEED_TOLERANCE {
        return Err(GeometryError::NotUnitSpeed { s, speed: v });
    }
    Ok(())
}

/// Frame expansions of a unit-speed curve at `s`, at the curve's full order.
pub fn frenet_jets(c: &Curve, s: f64) -> Result<FrameJets> {
    frenet_jets_with(c, s, DEFAULT_CURVATURE_TOLERANCE)
}

pub fn frenet_jets_with(c: &Curve, s: f64, curvature_tol: f64) -> Result<FrameJets> {
    require_unit_speed(c, s)?;
    let order = c.max_order();
    if order < 3 {
        return Err(GeometryError::InsufficientSmoothness { needed: 3, available: order });
    }
    frame_jets(&c.jet(s, order)?, s, curvature_tol)
}

pub fn frenet_apparatus(c: &Curve, s: f64) -> Result<FrenetFrame> {
    Ok(frenet_jets(c, s)?.frame())
}

pub fn frenet_apparatus_with(c: &Curve, s: f64, curvature_tol: f64) -> Result<FrenetFrame> {
    Ok(frenet_jets_with(c, s, curvature_tol)?.frame())
}

/// Common frame kind over a grid; a change of `ε` is an error.
pub fn frame_kind_along(c: &Curve, grid_size: usize) -> Result<FrameKind> {
    let mut common = None;
    for s in c.grid(grid_size.max(2)) {
        let k = frenet_apparatus(c, s)?.kind;
        match common {
            None => common = Some(k),
            Some(prev) if prev != k => return Err(GeometryError::MixedCausalCharacter { t: s }),
            _ => {}
        }
    }
    Ok(common.expect("grid is non-empty"))
}

/// Largest componentwise residual of the three Frenet equations at `s`,
/// using the curve's own derivatives of `T`, `N`, `B`.
pub fn frenet_equation_residual(c: &Curve, s: f64) -> Result<f64> {
    let j = frenet_jets(c, s)?;
    let predicted = j.frame().derivatives();
    let actual = [j.t.derivative(1), j.n.derivative(1), j.b.derivative(1)];
    Ok(predicted.iter().zip(&actual).map(|(p, a)| (*p - *a).max_abs()).fold(0.0, f64::max))
}

/// A scalar function of arc length usable as a curvature or torsion profile.
pub trait Profile: Send + Sync {
    fn eval_jet(&self, s: Jet) -> Result<Jet>;

    fn eval(&self, s: f64) -> Result<f64> {
        Ok(self.eval_jet(Jet::constant(s))?.value())
    }
}

impl Profile for Expr {
    fn eval_jet(&self, s: Jet) -> Result<Jet> {
        Ok(Expr::eval_jet(self, s)?)
    }

    fn eval(&self, s: f64) -> Result<f64> {
        Ok(Expr::eval(self, s)?)
    }
}

impl Profile for f64 {
    fn eval_jet(&self, _s: Jet) -> Result<Jet> {
        Ok(Jet::constant(*self))
    }

    fn eval(&self, _s: f64) -> Result<f64> {
        Ok(*self)
    }
}

/// Profile given by a closure on jets.
pub struct FnProfile<F>(pub F);

impl<F> Profile for FnProfile<F>
where
    F: Fn(Jet) -> Jet + Send + Sync,
{
    fn eval_jet(&self, s: Jet) -> Result<Jet> {
        Ok((self.0)(s))
    }
}

/// Result of integrating the Frenet system.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub curve: Curve,
    /// Largest Gram-matrix deviation over the integration nodes.
    pub max_gram_drift: f64,
    pub steps: usize,
}

/// Integrates the Frenet system of `kind` from `frame0` at `p0` over
/// `s_range` with fixed step, returning the unit-speed curve.
pub fn frenet_synthesize<K, T>(
    kind: FrameKind,
    kappa: K,
    tau: T,
    frame0: &FrenetFrame,
    p0: Vec3L,
    s_range: (f64, f64),
    step: f64,
) -> Result<Curve>
where
    K: Profile + 'static,
    T: Profile + 'static,
{
    Ok(synthesize_frames(kind, kappa, tau, frame0, p0, s_range, step)?.curve)
}

/// As [`frenet_synthesize`], also reporting frame drift.
pub fn synthesize_frames<K, T>(
    kind: FrameKind,
    kappa: K,
    tau: T,
    frame0: &FrenetFrame,
    p0: Vec3L,
    s_range: (f64, f64),
    step: f64,
) -> Result<Synthesis>
where
    K: Profile + 'static,
    T: Profile + 'static,
{
    let (s0, s1) = s_range;
    if !(s0.is_finite() && s1.is_finite() && s0 < s1) {
        return Err(GeometryError::InvalidArgument(format!("invalid range [{s0}, {s1}]")));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(GeometryError::InvalidArgument(format!("invalid step {step}")));
    }
    let frame0 = FrenetFrame { kind, ..*frame0 };
    frame0.validate(INITIAL_FRAME_TOLERANCE)?;
    let mut sys = FrenetSystem { kind, kappa: Box::new(kappa), tau: Box::new(tau), nodes: vec![], states: vec![] };

    let steps = (((s1 - s0) / step) - 1e-9).ceil().max(1.0) as usize;
    let mut y = [p0, frame0.t, frame0.n, frame0.b];
    let mut drift: f64 = 0.0;
    sys.nodes.push(s0);
    sys.states.push(y);
    for i in 0..steps {
        let s = sys.nodes[i];
        let next = if i + 1 == steps { s1 } else { s0 + (i + 1) as f64 * step };
        y = sys.rk4(s, &y, next - s)?;
        drift = drift.max(gram_residual(kind, &[y[1], y[2], y[3]]));
        sys.nodes.push(next);
        sys.states.push(y);
    }
    sys.curvature(s1)?;
    let label = format!("synthesized {kind} curve");
    let curve = Curve::from_map(s_range, label, Arc::new(sys), true)?;
    Ok(Synthesis { curve, max_gram_drift: drift, steps })
}

type State = [Vec3L; 4];

struct FrenetSystem {
    kind: FrameKind,
    kappa: Box<dyn Profile>,
    tau: Box<dyn Profile>,
    nodes: Vec<f64>,
    states: Vec<State>,
}

impl FrenetSystem {
    fn curvature(&self, s: f64) -> Result<f64> {
        let k = self.kappa.eval(s)?;
        if !(k > 0.0) {
            return Err(GeometryError::NonPositiveCurvature { s, kappa: k });
        }
        Ok(k)
    }

    fn rhs(&self, s: f64, y: &State) -> Result<State> {
        let k = self.curvature(s)?;
        let t = self.tau.eval(s)?;
        let (a, b) = self.kind.structure();
        Ok([y[1], k * y[2], a * k * y[1] + t * y[3], b * t * y[2]])
    }

    fn rk4(&self, s: f64, y: &State, h: f64) -> Result<State> {
        let add = |y: &State, k: &State, f: f64| -> State {
            [y[0] + f * k[0], y[1] + f * k[1], y[2] + f * k[2], y[3] + f * k[3]]
        };
        let k1 = self.rhs(s, y)?;
        let k2 = self.rhs(s + 0.5 * h, &add(y, &k1, 0.5 * h))?;
        let k3 = self.rhs(s + 0.5 * h, &add(y, &k2, 0.5 * h))?;
        let k4 = self.rhs(s + h, &add(y, &k3, h))?;
        let mut out = *y;
        for i in 0..4 {
            out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        Ok(out)
    }

    /// State at `s`: one RK4 substep from the nearest node at or below `s`.
    fn state_at(&self, s: f64) -> Result<State> {
        let i = match self.nodes.partition_point(|&x| x <= s) {
            0 => 0,
            p => p - 1,
        };
        let h = s - self.nodes[i];
        if h == 0.0 {
            return Ok(self.states[i]);
        }
        self.rk4(self.nodes[i], &self.states[i], h)
    }
}

impl CurveMap for FrenetSystem {
    /// Taylor expansion from the Frenet system itself: `Y′ = M(s) Y` solved
    /// coefficient by coefficient around the integrated state.
    fn jet(&self, s: f64, _order: usize) -> Result<JetVec> {
        let y = self.state_at(s)?;
        let var = Jet::variable(s);
        let k = self.kappa.eval_jet(var)?;
        if !(k.value() > 0.0) {
            return Err(GeometryError::NonPositiveCurvature { s, kappa: k.value() });
        }
        let t = self.tau.eval_jet(var)?;
        let (a, b) = self.kind.structure();
        let mut f = [JetVec::constant(y[0]), JetVec::constant(y[1]), JetVec::constant(y[2]), JetVec::constant(y[3])];
        for order in 0..MAX_ORDER {
            let rhs = [
                f[1],
                f[2].scale(k),
                f[1].scale(k.scale(a)) + f[3].scale(t),
                f[2].scale(t.scale(b)),
            ];
            let m = (order + 1) as f64;
            for (fi, ri) in f.iter_mut().zip(&rhs) {
                fi.x1.c[order + 1] = ri.x1.c[order] / m;
                fi.x2.c[order + 1] = ri.x2.c[order] / m;
                fi.x3.c[order + 1] = ri.x3.c[order] / m;
            }
        }
        Ok(f[0])
    }

    fn position(&self, s: f64) -> Result<Vec3L> {
        Ok(self.state_at(s)?[0])
    }

    fn max_order(&self) -> usize {
        MAX_ORDER
    }
}

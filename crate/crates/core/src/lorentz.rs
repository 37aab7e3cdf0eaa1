//! Vector algebra of Minkowski 3-space with metric signature (−, +, +).
//!
//! The first coordinate carries the negative sign. The cross product is the
//! Lorentzian one, `e1 ∧ e2 = −e3`, `e2 ∧ e3 = e1`, `e3 ∧ e1 = −e2`, which
//! makes `u ∧ v` metric-orthogonal to both factors.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::jet::Jet;

/// Absolute band on `⟨v, v⟩` inside which a nonzero vector counts as null.
pub const DEFAULT_NULL_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec3L {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Vec3L {
    pub const ZERO: Vec3L = Vec3L::new(0.0, 0.0, 0.0);
    pub const E1: Vec3L = Vec3L::new(1.0, 0.0, 0.0);
    pub const E2: Vec3L = Vec3L::new(0.0, 1.0, 0.0);
    pub const E3: Vec3L = Vec3L::new(0.0, 0.0, 1.0);

    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Vec3L { x1, x2, x3 }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Vec3L::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    /// Largest absolute component; used for componentwise tolerances.
    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn inner(self, other: Vec3L) -> f64 {
        inner(self, other)
    }

    pub fn cross(self, other: Vec3L) -> Vec3L {
        cross(self, other)
    }

    pub fn norm(self) -> f64 {
        norm(self)
    }
}

impl fmt::Display for Vec3L {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

impl Add for Vec3L {
    type Output = Vec3L;
    fn add(self, o: Vec3L) -> Vec3L {
        Vec3L::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl AddAssign for Vec3L {
    fn add_assign(&mut self, o: Vec3L) {
        *self = *self + o;
    }
}

impl Sub for Vec3L {
    type Output = Vec3L;
    fn sub(self, o: Vec3L) -> Vec3L {
        Vec3L::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for Vec3L {
    type Output = Vec3L;
    fn neg(self) -> Vec3L {
        Vec3L::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<f64> for Vec3L {
    type Output = Vec3L;
    fn mul(self, s: f64) -> Vec3L {
        Vec3L::new(self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl Mul<Vec3L> for f64 {
    type Output = Vec3L;
    fn mul(self, v: Vec3L) -> Vec3L {
        v * self
    }
}

impl Div<f64> for Vec3L {
    type Output = Vec3L;
    fn div(self, s: f64) -> Vec3L {
        Vec3L::new(self.x1 / s, self.x2 / s, self.x3 / s)
    }
}

/// `−u1 v1 + u2 v2 + u3 v3`.
pub fn inner(u: Vec3L, v: Vec3L) -> f64 {
    -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3
}

pub fn cross(u: Vec3L, v: Vec3L) -> Vec3L {
    Vec3L::new(
        u.x2 * v.x3 - u.x3 * v.x2,
        u.x1 * v.x3 - u.x3 * v.x1,
        u.x2 * v.x1 - u.x1 * v.x2,
    )
}

/// Pseudo-norm `|⟨v, v⟩|^(1/2)`.
pub fn norm(v: Vec3L) -> f64 {
    inner(v, v).abs().sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalCharacter {
    Timelike,
    Spacelike,
    Null,
    Zero,
}

impl CausalCharacter {
    /// `−1` for timelike, `+1` for spacelike, `0` otherwise.
    pub fn sign(self) -> f64 {
        match self {
            CausalCharacter::Timelike => -1.0,
            CausalCharacter::Spacelike => 1.0,
            _ => 0.0,
        }
    }
}

impl fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Null => "null",
            CausalCharacter::Zero => "zero",
        };
        f.write_str(s)
    }
}

pub fn causal_character(v: Vec3L) -> CausalCharacter {
    causal_character_with(v, DEFAULT_NULL_TOLERANCE)
}

pub fn causal_character_with(v: Vec3L, null_tolerance: f64) -> CausalCharacter {
    if v.is_zero() {
        return CausalCharacter::Zero;
    }
    let q = inner(v, v);
    if q.abs() <= null_tolerance {
        CausalCharacter::Null
    } else if q < 0.0 {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Spacelike
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AngleKind {
    /// Two timelike vectors in the same time cone.
    Hyperbolic,
    /// Two spacelike vectors spanning a timelike plane.
    Central,
    /// Two spacelike vectors spanning a spacelike plane.
    Spacelike,
    /// One spacelike and one timelike vector.
    LorentzianTimelike,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LorentzAngle {
    pub kind: AngleKind,
    /// Non-negative; radians for [`AngleKind::Spacelike`], hyperbolic units otherwise.
    pub theta: f64,
}

/// Unsigned angle between two non-null vectors.
///
/// The angle is a magnitude: for the central and Lorentzian-timelike kinds
/// the absolute value of the inner product is used, so a negative product
/// yields the same `θ` as its positive counterpart.
pub fn angle_between(u: Vec3L, v: Vec3L) -> Result<LorentzAngle> {
    use CausalCharacter::*;
    let (cu, cv) = (causal_character(u), causal_character(v));
    if matches!(cu, Null | Zero) || matches!(cv, Null | Zero) {
        return Err(GeometryError::NullInput);
    }
    let (nu, nv) = (norm(u), norm(v));
    let g = inner(u, v);
    let angle = match (cu, cv) {
        (Timelike, Timelike) => {
            if u.x1.signum() != v.x1.signum() {
                return Err(GeometryError::OrientationMismatch);
            }
            let ch = (-g / (nu * nv)).max(1.0);
            LorentzAngle { kind: AngleKind::Hyperbolic, theta: ch.acosh() }
        }
        (Spacelike, Spacelike) => {
            let disc = g * g - inner(u, u) * inner(v, v);
            if disc > 0.0 {
                let ch = (g.abs() / (nu * nv)).max(1.0);
                LorentzAngle { kind: AngleKind::Central, theta: ch.acosh() }
            } else {
                let c = (g / (nu * nv)).clamp(-1.0, 1.0);
                LorentzAngle { kind: AngleKind::Spacelike, theta: c.acos() }
            }
        }
        _ => LorentzAngle {
            kind: AngleKind::LorentzianTimelike,
            theta: (g.abs() / (nu * nv)).asinh(),
        },
    };
    Ok(angle)
}

/// A vector of jets: the Taylor expansion of a curve (or frame field) at a point.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct JetVec {
    pub x1: Jet,
    pub x2: Jet,
    pub x3: Jet,
}

impl JetVec {
    pub fn new(x1: Jet, x2: Jet, x3: Jet) -> Self {
        JetVec { x1, x2, x3 }
    }

    pub fn constant(v: Vec3L) -> Self {
        JetVec::new(Jet::constant(v.x1), Jet::constant(v.x2), Jet::constant(v.x3))
    }

    pub fn value(&self) -> Vec3L {
        Vec3L::new(self.x1.value(), self.x2.value(), self.x3.value())
    }

    /// `k`-th derivative vector at the expansion point.
    pub fn derivative(&self, k: usize) -> Vec3L {
        Vec3L::new(self.x1.derivative(k), self.x2.derivative(k), self.x3.derivative(k))
    }

    pub fn differentiate(&self) -> JetVec {
        self.map(|j| j.differentiate())
    }

    pub fn map(&self, f: impl Fn(&Jet) -> Jet) -> JetVec {
        JetVec::new(f(&self.x1), f(&self.x2), f(&self.x3))
    }

    pub fn scale(&self, s: Jet) -> JetVec {
        self.map(|j| *j * s)
    }

    pub fn compose(&self, delta: &Jet) -> JetVec {
        self.map(|j| j.compose(delta))
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    pub fn inner(&self, o: &JetVec) -> Jet {
        -(self.x1 * o.x1) + self.x2 * o.x2 + self.x3 * o.x3
    }

    pub fn cross(&self, o: &JetVec) -> JetVec {
        JetVec::new(
            self.x2 * o.x3 - self.x3 * o.x2,
            self.x1 * o.x3 - self.x3 * o.x1,
            self.x2 * o.x1 - self.x1 * o.x2,
        )
    }
}

impl Add for JetVec {
    type Output = JetVec;
    fn add(self, o: JetVec) -> JetVec {
        JetVec::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl Sub for JetVec {
    type Output = JetVec;
    fn sub(self, o: JetVec) -> JetVec {
        JetVec::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Mul<f64> for JetVec {
    type Output = JetVec;
    fn mul(self, s: f64) -> JetVec {
        self.map(|j| *j * s)
    }
}

//! The claimed curvature and torsion relations of a Mannheim pair, as
//! residual functions of pointwise scalar data.
//!
//! Each function evaluates one relation exactly as stated for the pair type,
//! so the same code audits numerical pairs and hand-built data.

use serde::{Deserialize, Serialize};

use super::pair::MannheimPairType;

/// Scalars of a pair at one pair of corresponding points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityInput {
    pub pair_type: MannheimPairType,
    pub lambda: f64,
    pub kappa: f64,
    pub tau: f64,
    pub kappa_star: f64,
    pub tau_star: f64,
    pub theta: f64,
    /// `dθ/ds*`.
    pub dtheta: f64,
}

impl IdentityInput {
    /// `(cosh θ, sinh θ)` for types 1 to 4, `(cos θ, sin θ)` for type 5.
    fn angle_pair(&self) -> (f64, f64) {
        match self.pair_type {
            MannheimPairType::Type5 => (self.theta.cos(), self.theta.sin()),
            _ => (self.theta.cosh(), self.theta.sinh()),
        }
    }
}

/// `|τ* + κ/(λτ)|` for types 1 and 4, `|τ* − κ/(λτ)|` otherwise.
pub fn torsion_product(d: &IdentityInput) -> f64 {
    let q = d.kappa / (d.lambda * d.tau);
    match d.pair_type {
        MannheimPairType::Type1 | MannheimPairType::Type4 => (d.tau_star + q).abs(),
        _ => (d.tau_star - q).abs(),
    }
}

/// `μ = λ tanh θ`, or `λ tan θ` for type 5.
pub fn mu(d: &IdentityInput) -> f64 {
    match d.pair_type {
        MannheimPairType::Type5 => d.lambda * d.theta.tan(),
        _ => d.lambda * d.theta.tanh(),
    }
}

/// `|μτ ± λκ − 1|`, plus for types 1, 2, 5 and minus for types 3, 4.
pub fn linear_relation(d: &IdentityInput) -> f64 {
    let sign = match d.pair_type {
        MannheimPairType::Type3 | MannheimPairType::Type4 => -1.0,
        _ => 1.0,
    };
    (mu(d) * d.tau + sign * d.lambda * d.kappa - 1.0).abs()
}

/// Residuals of the four frame relations of the pair type, in the order
/// angle rate, partner torsion, curvature projection, torsion projection.
pub fn frame_relations(d: &IdentityInput) -> [f64; 4] {
    use MannheimPairType::*;
    let (c, s) = d.angle_pair();
    let (k, t, ks, ts, dth) = (d.kappa, d.tau, d.kappa_star, d.tau_star, d.dtheta);
    let rate_sign = if d.pair_type == Type4 { 1.0 } else { -1.0 };
    let (combo, proj_k, proj_t) = match d.pair_type {
        Type1 => (k * c + t * s, ts * c, -ts * s),
        Type2 => (-k * s - t * c, ts * s, -ts * c),
        Type3 => (-k * s + t * c, ts * s, ts * c),
        Type4 => (k * c - t * s, ts * c, ts * s),
        Type5 => (k * s + t * c, ts * s, ts * c),
    };
    [
        (ks - rate_sign * dth).abs(),
        (ts - combo).abs(),
        (k - proj_k).abs(),
        (t - proj_t).abs(),
    ]
}

/// `|τ*² − f|` with `f = κ² − τ²` (types 1, 4), `τ² − κ²` (types 2, 3) or
/// `κ² + τ²` (type 5): the squared consequence of the projection relations.
pub fn torsion_square(d: &IdentityInput) -> f64 {
    use MannheimPairType::*;
    let (k2, t2) = (d.kappa * d.kappa, d.tau * d.tau);
    let f = match d.pair_type {
        Type1 | Type4 => k2 - t2,
        Type2 | Type3 => t2 - k2,
        Type5 => k2 + t2,
    };
    (d.tau_star * d.tau_star - f).abs()
}

/// `|τ* − (κ² − τ²)|`, the relation in its unsquared form.
pub fn torsion_square_literal(d: &IdentityInput) -> f64 {
    (d.tau_star - (d.kappa * d.kappa - d.tau * d.tau)).abs()
}

/// Right-hand sides of the two indicatrix relations before the alignment
/// sign; `r_star = ds*/ds₃*`.
pub fn indicatrix_rhs(d: &IdentityInput, r_star: f64) -> (f64, f64) {
    use MannheimPairType::*;
    let (c, s) = d.angle_pair();
    let a = d.tau_star * r_star;
    match d.pair_type {
        Type1 => (a * c, -a * s),
        Type2 | Type3 => (-a * s, -a * c),
        Type4 => (-a * c, a * s),
        Type5 => (a * s, a * c),
    }
}

/// Distances between the curves and their centers of curvature `M`, `M*`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureCenterDistances {
    /// `‖αM‖ = 1/κ`.
    pub to_own_center: f64,
    /// `‖α*M*‖ = 1/κ*`.
    pub partner_to_own_center: f64,
    /// `‖αM*‖ = √|λ² − 1/κ*²|`.
    pub to_partner_center: f64,
    /// `‖α*M‖ = |1/κ − λ|`.
    pub partner_to_center: f64,
    /// `(1 − λκ)·√|λ²κ*² − 1|`.
    pub ratio: f64,
}

pub fn curvature_center_distances(lambda: f64, kappa: f64, kappa_star: f64) -> CurvatureCenterDistances {
    CurvatureCenterDistances {
        to_own_center: 1.0 / kappa,
        partner_to_own_center: 1.0 / kappa_star,
        to_partner_center: (lambda * lambda - 1.0 / (kappa_star * kappa_star)).abs().sqrt(),
        partner_to_center: (1.0 / kappa - lambda).abs(),
        ratio: (1.0 - lambda * kappa) * (lambda * lambda * kappa_star * kappa_star - 1.0).abs().sqrt(),
    }
}

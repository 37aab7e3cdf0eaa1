//! Shared fixtures for the geometry benchmarks.

use mannheim_core::builtin::timelike_hyperbolic_helix;
use mannheim_core::curve::Curve;
use mannheim_core::expr::{parse_expr, Expr};
use mannheim_core::frenet::{frenet_synthesize, FrameKind, FrenetFrame};
use mannheim_core::lorentz::Vec3L;
use mannheim_core::mannheim::MannheimPair;

/// `κ = 1 + 0.3 sin 2s`, `τ = 0.5 cosh s − 0.2`.
pub fn varying_profile() -> (Expr, Expr) {
    (parse_expr("1 + 0.3*sin(2*s)").unwrap(), parse_expr("0.5*cosh(s) - 0.2").unwrap())
}

pub fn synthesized(kind: FrameKind, step: f64) -> Curve {
    let (kappa, tau) = varying_profile();
    frenet_synthesize(kind, kappa, tau, &FrenetFrame::standard(kind), Vec3L::ZERO, (0.0, 1.0), step).unwrap()
}

/// Offset pair of the built-in timelike helix at `λ = 20`.
pub fn helix_pair() -> MannheimPair {
    MannheimPair::from_partner(&timelike_hyperbolic_helix(), 20.0).unwrap()
}

/// Type 3 pair built from `κ = cos²u`, `τ = sin u cos u`, `u = 0.3 + 0.1s`,
/// which satisfies `κ = κ² + τ²` with `λ = 1`.
pub fn synthesized_pair() -> MannheimPair {
    let kind = FrameKind::SpacelikeCurveEpsMinus;
    let kappa = parse_expr("cos(0.3 + 0.1*s)^2").unwrap();
    let tau = parse_expr("sin(0.3 + 0.1*s)*cos(0.3 + 0.1*s)").unwrap();
    let c = frenet_synthesize(kind, kappa, tau, &FrenetFrame::standard(kind), Vec3L::ZERO, (0.0, 1.0), 1e-3).unwrap();
    MannheimPair::from_curve(&c, 1.0).unwrap()
}

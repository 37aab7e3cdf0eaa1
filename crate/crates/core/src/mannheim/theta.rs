//! Signed angle between the tangent of a curve and the `(T*, N*)` plane of
//! its partner.
//!
//! The kind of angle follows the plane: when one of `T*`, `N*` is timelike the
//! plane is Lorentzian and `T = ±(cosh θ e + sinh θ f)`; when both are
//! spacelike it is Euclidean and `T = cos θ T* + sin θ N*`.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::lorentz::{inner, Vec3L};

/// Allowed deviation of `cosh² − sinh²` (or `cos² + sin²`) from 1.
pub const DECOMPOSITION_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlaneKind {
    Hyperbolic,
    Circular,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaDecomposition {
    pub theta: f64,
    pub plane: PlaneKind,
    /// `±1`: sign of the coefficient that plays the role of `cosh θ`
    /// (always `+1` for the circular plane).
    pub orientation: f64,
    /// Coefficient of `T` on the vector paired with `cosh θ` (or `cos θ`).
    pub even_coefficient: f64,
    /// Coefficient of `T` on the vector paired with `sinh θ` (or `sin θ`).
    pub odd_coefficient: f64,
    /// `|cosh² − sinh² − 1|` or `|cos² + sin² − 1|` of the raw coefficients.
    pub deviation: f64,
    /// Componentwise distance between `T` and its reconstruction from `θ`.
    pub reconstruction_residual: f64,
}

/// Decomposes `t` against the partner vectors `t_star`, `n_star` at parameter `s`.
pub fn decompose_tangent(t: Vec3L, t_star: Vec3L, n_star: Vec3L, s: f64) -> Result<ThetaDecomposition> {
    let (gt, gn) = (inner(t_star, t_star), inner(n_star, n_star));
    let dec = if gt < 0.0 || gn < 0.0 {
        let (et, es) = if gt < 0.0 { (t_star, n_star) } else { (n_star, t_star) };
        let ct = inner(t, et) / inner(et, et);
        let cs = inner(t, es) / inner(es, es);
        let (even, odd, e_even, e_odd) = if inner(t, t) > 0.0 { (cs, ct, es, et) } else { (ct, cs, et, es) };
        let orientation = if even < 0.0 { -1.0 } else { 1.0 };
        let theta = (orientation * odd).asinh();
        let rebuilt = orientation * (theta.cosh() * e_even + theta.sinh() * e_odd);
        ThetaDecomposition {
            theta,
            plane: PlaneKind::Hyperbolic,
            orientation,
            even_coefficient: even,
            odd_coefficient: odd,
            deviation: (even * even - odd * odd - 1.0).abs(),
            reconstruction_residual: (t - rebuilt).max_abs(),
        }
    } else {
        let c = inner(t, t_star) / gt;
        let sn = inner(t, n_star) / gn;
        let theta = sn.atan2(c);
        let rebuilt = theta.cos() * t_star + theta.sin() * n_star;
        ThetaDecomposition {
            theta,
            plane: PlaneKind::Circular,
            orientation: 1.0,
            even_coefficient: c,
            odd_coefficient: sn,
            deviation: (c * c + sn * sn - 1.0).abs(),
            reconstruction_residual: (t - rebuilt).max_abs(),
        }
    };
    if !(dec.deviation <= DECOMPOSITION_TOLERANCE) {
        return Err(GeometryError::InconsistentDecomposition { s, deviation: dec.deviation });
    }
    Ok(dec)
}

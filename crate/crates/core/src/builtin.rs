//! Closed-form unit-speed curves used as worked examples.

use crate::curve::Curve;
use crate::jet::Jet;
use crate::lorentz::JetVec;

/// Default parameter interval of the built-in curves.
pub const DEFAULT_DOMAIN: (f64, f64) = (0.0, 1.0);

/// `(−½ sinh s, ½ cosh s, (√5/2) s)`: spacelike, timelike binormal,
/// `κ = 1/2`, `τ = √5/2`.
pub fn spacelike_hyperbolic_helix() -> Curve {
    spacelike_hyperbolic_helix_on(DEFAULT_DOMAIN)
}

pub fn spacelike_hyperbolic_helix_on(domain: (f64, f64)) -> Curve {
    let c = 5f64.sqrt() / 2.0;
    Curve::from_jet_fn(domain, "spacelike hyperbolic helix", move |s: Jet| {
        let (sh, ch) = s.sinh_cosh();
        JetVec::new(sh * -0.5, ch * 0.5, s * c)
    })
    .expect("valid domain")
    .assume_unit_speed()
}

/// `(2 sinh s, 2 cosh s, √3 s)`: timelike, `κ = 2`, `τ = √3`.
pub fn timelike_hyperbolic_helix() -> Curve {
    timelike_hyperbolic_helix_on(DEFAULT_DOMAIN)
}

pub fn timelike_hyperbolic_helix_on(domain: (f64, f64)) -> Curve {
    let c = 3f64.sqrt();
    Curve::from_jet_fn(domain, "timelike hyperbolic helix", move |s: Jet| {
        let (sh, ch) = s.sinh_cosh();
        JetVec::new(sh * 2.0, ch * 2.0, s * c)
    })
    .expect("valid domain")
    .assume_unit_speed()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_unit_speed() {
        for c in [spacelike_hyperbolic_helix(), timelike_hyperbolic_helix()] {
            assert!(c.unit_speed_deviation(21).unwrap() < 1e-14);
        }
    }
}

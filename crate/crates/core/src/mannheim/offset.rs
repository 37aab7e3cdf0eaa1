//! Offsets of a unit-speed curve along its binormal or principal normal.

use std::sync::Arc;

use crate::curve::{Curve, CurveMap, DEFAULT_UNIT_SPEED_TOLERANCE, DEFAULT_VALIDATION_GRID};
use crate::error::{GeometryError, Result};
use crate::frenet::{frenet_apparatus, frenet_jets};
use crate::lorentz::{JetVec, Vec3L};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffsetField {
    Binormal,
    Normal,
}

struct OffsetMap {
    base: Curve,
    /// Signed multiple of the field added to the base position.
    coefficient: f64,
    field: OffsetField,
}

impl OffsetMap {
    fn pick(&self, j: &crate::frenet::FrameJets) -> JetVec {
        match self.field {
            OffsetField::Binormal => j.b,
            OffsetField::Normal => j.n,
        }
    }
}

impl CurveMap for OffsetMap {
    fn jet(&self, t: f64, _order: usize) -> Result<JetVec> {
        let alpha = self.base.jet(t, self.base.max_order())?;
        let frames = crate::frenet::frame_jets(&alpha, t, crate::frenet::DEFAULT_CURVATURE_TOLERANCE)?;
        let f = self.pick(&frames);
        Ok(alpha + f.map(|c| *c * self.coefficient))
    }

    fn position(&self, t: f64) -> Result<Vec3L> {
        let frames = frenet_jets(&self.base, t)?;
        Ok(self.base.position(t)? + self.coefficient * self.pick(&frames).value())
    }

    fn max_order(&self) -> usize {
        self.base.max_order().saturating_sub(2)
    }
}

fn offset(base: &Curve, lambda: f64, field: OffsetField) -> Result<Curve> {
    if lambda == 0.0 {
        return Err(GeometryError::ZeroLambda);
    }
    if !lambda.is_finite() {
        return Err(GeometryError::InvalidArgument(format!("lambda must be finite, got {lambda}")));
    }
    let base = base.clone().into_unit_speed(DEFAULT_VALIDATION_GRID, DEFAULT_UNIT_SPEED_TOLERANCE)?;
    for s in base.grid(17) {
        frenet_apparatus(&base, s)?;
    }
    let (coefficient, name) = match field {
        OffsetField::Binormal => (lambda, "binormal"),
        OffsetField::Normal => (-lambda, "normal"),
    };
    let label = format!("{} offset along {name} by {lambda}", base.label());
    let map = OffsetMap { base: base.clone(), coefficient, field };
    Curve::from_map(base.domain(), label, Arc::new(map), false)
}

/// `α = α* + λB*`; generally not unit-speed and not a partner of `α*`.
pub fn offset_along_binormal(cstar: &Curve, lambda: f64) -> Result<Curve> {
    offset(cstar, lambda, OffsetField::Binormal)
}

/// `α* = α − λN`.
pub fn offset_along_normal(c: &Curve, lambda: f64) -> Result<Curve> {
    offset(c, lambda, OffsetField::Normal)
}

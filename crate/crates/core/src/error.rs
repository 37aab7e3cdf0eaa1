use thiserror::Error;

use crate::expr::ExprError;

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("null or zero vector where a non-null vector is required")]
    NullInput,
    #[error("timelike vectors point in opposite time directions")]
    OrientationMismatch,
    #[error("parameter {t} outside the curve domain [{a}, {b}]")]
    OutOfDomain { t: f64, a: f64, b: f64 },
    #[error("causal character changes along the curve (near parameter {t})")]
    MixedCausalCharacter { t: f64 },
    #[error("null tangent at parameter {t}")]
    NullTangent { t: f64 },
    #[error("curvature {kappa:e} at parameter {s} is below the tolerance")]
    VanishingCurvature { s: f64, kappa: f64 },
    #[error("principal normal is null at parameter {s}")]
    NullPrincipalNormal { s: f64 },
    #[error("curve is not unit-speed at parameter {s} (speed {speed})")]
    NotUnitSpeed { s: f64, speed: f64 },
    #[error("invalid initial frame: {0}")]
    InvalidInitialFrame(String),
    #[error("prescribed curvature {kappa} is not positive at s = {s}")]
    NonPositiveCurvature { s: f64, kappa: f64 },
    #[error("offset constant lambda must be nonzero")]
    ZeroLambda,
    #[error("causal characters do not form one of the five pair types: {0}")]
    UnsupportedCombination(String),
    #[error("curvature condition value {value:e} is not positive at s = {s}")]
    NegativeConditionValue { s: f64, value: f64 },
    #[error("torsion vanishes at s = {s}")]
    VanishingTorsion { s: f64 },
    #[error("frame decomposition inconsistent at s = {s} (deviation {deviation:e})")]
    InconsistentDecomposition { s: f64, deviation: f64 },
    #[error("indicatrix rate {rate:e} below tolerance at s = {s}")]
    DegenerateIndicatrix { s: f64, rate: f64 },
    #[error("curve provides derivatives up to order {available}, {needed} required")]
    InsufficientSmoothness { needed: usize, available: usize },
    #[error("non-finite value produced at parameter {t}")]
    NonFinite { t: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid samples: {0}")]
    InvalidSamples(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

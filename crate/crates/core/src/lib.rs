// Comparisons that must reject NaN are written `!(x > y)`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod expr;
pub mod jet;
pub mod lorentz;
pub mod numeric;
pub mod curve;
pub mod frenet;
pub mod builtin;
pub mod mannheim;
pub mod indicatrix;

pub use curve::{Curve, CurveSamples};
pub use error::{GeometryError, Result};
pub use frenet::{FrameKind, FrenetFrame};
pub use lorentz::Vec3L;
pub use mannheim::{MannheimPair, MannheimPairType, Verdict, VerificationReport};

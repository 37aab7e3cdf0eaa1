//! Mannheim partner curves: construction, classification and audits of the
//! curvature and torsion relations claimed for them.

pub mod identities;
mod offset;
mod pair;
mod report;
mod theta;
mod verify;

pub use identities::{curvature_center_distances, CurvatureCenterDistances, IdentityInput};
pub use offset::{offset_along_binormal, offset_along_normal, OffsetField};
pub use pair::{
    classify_pair, collinearity_coefficients, collinearity_condition, collinearity_lambda, mannheim_curve_test,
    mannheim_residual, max_mannheim_residual, theta, theta_decomposition, Correspondence, CurveTest, MannheimPair,
    MannheimPairType,
};
pub use report::{Verdict, VerificationReport};
pub use theta::{decompose_tangent, PlaneKind, ThetaDecomposition, DECOMPOSITION_TOLERANCE};
pub use verify::*;

//! Grid audits of a pair against the claimed relations.
//!
//! Relations other than the partner distance are judged only when the pair
//! satisfies the collinearity hypothesis on the whole grid; otherwise their
//! residuals are published as `Reported`.

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

use super::identities::{self, IdentityInput};
use super::pair::{collinearity, MannheimPair};
use super::report::{Verdict, VerificationReport};
use super::theta::{decompose_tangent, ThetaDecomposition};
use crate::curve::fd_step;
use crate::error::{GeometryError, Result};
use crate::frenet::FrenetFrame;
use crate::lorentz::norm;
use crate::numeric::{fd_weights, stencil_offsets};

pub const PARTNER_DISTANCE: &str = "partner-distance";
pub const TORSION_PRODUCT: &str = "torsion-product";
pub const LINEAR_CURVATURE_RELATION: &str = "linear-curvature-relation";
pub const MU_CONSTANCY: &str = "mu-constancy";
pub const ANGLE_RATE_CURVATURE: &str = "angle-rate-curvature";
pub const PARTNER_TORSION_COMBINATION: &str = "partner-torsion-combination";
pub const CURVATURE_PROJECTION: &str = "curvature-projection";
pub const TORSION_PROJECTION: &str = "torsion-projection";
pub const TORSION_SQUARE: &str = "torsion-square";
pub const TORSION_SQUARE_LITERAL: &str = "torsion-square-literal";
pub const CURVATURE_CENTER_RATIO: &str = "curvature-center-ratio";
pub const INDICATRIX_CURVATURE: &str = "indicatrix-curvature";
pub const INDICATRIX_TORSION: &str = "indicatrix-torsion";

/// Note attached to a ratio report whose profile is constant.
pub const CONSTANT_RATIO: &str = "ConstantRatio";

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub distance: f64,
    pub torsion: f64,
    pub linear: f64,
    pub frame: f64,
    pub square: f64,
    pub indicatrix: f64,
    /// Largest collinearity residual under which relations are judged.
    pub hypothesis: f64,
    /// Non-constancy threshold of the curvature-center ratio, relative to its mean.
    pub ratio_relative: f64,
    /// Indicatrix rates at or below this are degenerate.
    pub degeneracy: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            distance: 1e-9,
            torsion: 1e-5,
            linear: 1e-5,
            frame: 1e-4,
            square: 1e-5,
            indicatrix: 1e-4,
            hypothesis: 1e-6,
            ratio_relative: 1e-6,
            degeneracy: 1e-9,
        }
    }
}

impl Tolerances {
    /// Every identity tolerance (not the hypothesis or degeneracy bands) set to `tol`.
    pub fn uniform(tol: f64) -> Self {
        Tolerances {
            distance: tol,
            torsion: tol,
            linear: tol,
            frame: tol,
            square: tol,
            indicatrix: tol,
            ..Tolerances::default()
        }
    }
}

/// Pair data at one grid point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointData {
    pub s: f64,
    pub s_star: f64,
    /// `ds*/ds`.
    pub ds_star_ds: f64,
    pub c: FrenetFrame,
    pub cstar: FrenetFrame,
    /// `|N′|` of `C`: arc-length rate of its normal indicatrix.
    pub rate_n: f64,
    /// `|B*′|` of `C*`: arc-length rate of its binormal indicatrix.
    pub rate_bstar: f64,
    /// `‖α(s) − α*(s*)‖`.
    pub distance: f64,
    pub collinearity: f64,
}

/// Grid evaluation of a pair shared by all relation checks.
pub struct Verifier<'a> {
    pair: &'a MannheimPair,
    grid: Vec<f64>,
    points: Vec<PointData>,
    hypothesis_residual: f64,
    angles: OnceCell<Vec<(ThetaDecomposition, f64)>>,
}

impl<'a> Verifier<'a> {
    pub fn new(pair: &'a MannheimPair, grid_size: usize) -> Result<Self> {
        if grid_size < 2 {
            return Err(GeometryError::InvalidArgument("grid size must be at least 2".into()));
        }
        let grid = pair.grid(grid_size);
        let mut points = Vec::with_capacity(grid.len());
        for &s in &grid {
            let s_star = pair.corresponding(s)?;
            let (fc, fs) = pair.frames(s)?;
            let gap = pair.c.position(s)? - pair.cstar.position(s_star)?;
            points.push(PointData {
                s,
                s_star,
                ds_star_ds: pair.correspondence.rate(s)?,
                c: fc.frame(),
                cstar: fs.frame(),
                rate_n: norm(fc.n.derivative(1)),
                rate_bstar: norm(fs.b.derivative(1)),
                distance: norm(gap),
                collinearity: collinearity(&fc, &fs),
            });
        }
        let hypothesis_residual = points.iter().map(|p| p.collinearity).fold(0.0, f64::max);
        Ok(Verifier { pair, grid, points, hypothesis_residual, angles: OnceCell::new() })
    }

    pub fn pair(&self) -> &MannheimPair {
        self.pair
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn points(&self) -> &[PointData] {
        &self.points
    }

    /// Largest collinearity residual over the grid.
    pub fn hypothesis_residual(&self) -> f64 {
        self.hypothesis_residual
    }

    pub fn hypothesis_holds(&self, tol: &Tolerances) -> bool {
        self.hypothesis_residual <= tol.hypothesis
    }

    fn theta_at(&self, s: f64) -> Result<ThetaDecomposition> {
        let (fc, fs) = self.pair.frames(s)?;
        decompose_tangent(fc.t.value(), fs.t.value(), fs.n.value(), s)
    }

    /// `θ` and `dθ/ds*` at every grid point; the derivative is a
    /// fourth-order finite difference in `s` divided by `ds*/ds`.
    pub fn angles(&self) -> Result<&[(ThetaDecomposition, f64)]> {
        if let Some(a) = self.angles.get() {
            return Ok(a);
        }
        let (a, b) = self.pair.c.domain();
        let mut out = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let dec = self.theta_at(p.s)?;
            let h = (fd_step(1) * p.s.abs().max(1.0)).min((b - a) / 5.0);
            let offsets = stencil_offsets(1, (a - p.s) / h, (b - p.s) / h);
            let nodes: Vec<f64> = offsets.iter().map(|o| o * h).collect();
            let w = fd_weights(0.0, &nodes, 1);
            let mut d = 0.0;
            for (x, wi) in nodes.iter().zip(&w) {
                let th = if *x == 0.0 { dec.theta } else { self.theta_at((p.s + x).clamp(a, b))?.theta };
                d += wi * th;
            }
            out.push((dec, d / p.ds_star_ds));
        }
        Ok(self.angles.get_or_init(|| out))
    }

    /// Scalar data of every grid point, as fed to the relation formulas.
    pub fn inputs(&self) -> Result<Vec<IdentityInput>> {
        let angles = self.angles()?;
        Ok(self
            .points
            .iter()
            .zip(angles)
            .map(|(p, (dec, dth))| IdentityInput {
                pair_type: self.pair.pair_type,
                lambda: self.pair.lambda,
                kappa: p.c.kappa,
                tau: p.c.tau,
                kappa_star: p.cstar.kappa,
                tau_star: p.cstar.tau,
                theta: dec.theta,
                dtheta: *dth,
            })
            .collect())
    }

    fn report(&self, name: &str, residuals: Vec<f64>, tol: f64, t: &Tolerances) -> VerificationReport {
        VerificationReport::conditional(name, self.grid.clone(), residuals, tol, self.hypothesis_holds(t))
    }

    /// `|‖α − α*‖ − |λ||`, always judged.
    pub fn distance(&self, t: &Tolerances) -> VerificationReport {
        let lam = self.pair.lambda.abs();
        let r = self.points.iter().map(|p| (p.distance - lam).abs()).collect();
        VerificationReport::judged(PARTNER_DISTANCE, self.grid.clone(), r, t.distance)
    }

    pub fn torsion_product(&self, t: &Tolerances) -> Result<VerificationReport> {
        if let Some(p) = self.points.iter().find(|p| p.c.tau == 0.0) {
            return Err(GeometryError::VanishingTorsion { s: p.s });
        }
        let r = self.inputs()?.iter().map(identities::torsion_product).collect();
        Ok(self.report(TORSION_PRODUCT, r, t.torsion, t))
    }

    pub fn linear_relation(&self, t: &Tolerances) -> Result<VerificationReport> {
        let inputs = self.inputs()?;
        let r = inputs.iter().map(identities::linear_relation).collect();
        let mus: Vec<f64> = inputs.iter().map(identities::mu).collect();
        let spread = spread(&mus);
        Ok(self.report(LINEAR_CURVATURE_RELATION, r, t.linear, t).with_note(format!("mu range {spread:e}")))
    }

    /// `μ(s) − min μ`: the largest residual is the spread of `μ`. Never judged.
    pub fn mu_constancy(&self) -> Result<VerificationReport> {
        let mus: Vec<f64> = self.inputs()?.iter().map(identities::mu).collect();
        let min = mus.iter().copied().fold(f64::INFINITY, f64::min);
        let r = mus.iter().map(|m| m - min).collect();
        Ok(VerificationReport::reported(MU_CONSTANCY, self.grid.clone(), r, 0.0))
    }

    pub fn frame_relations(&self, t: &Tolerances) -> Result<Vec<VerificationReport>> {
        let all: Vec<[f64; 4]> = self.inputs()?.iter().map(identities::frame_relations).collect();
        let names = [ANGLE_RATE_CURVATURE, PARTNER_TORSION_COMBINATION, CURVATURE_PROJECTION, TORSION_PROJECTION];
        Ok(names
            .iter()
            .enumerate()
            .map(|(i, n)| self.report(n, all.iter().map(|r| r[i]).collect(), t.frame, t))
            .collect())
    }

    /// Squared form (judged under the hypothesis) and the unsquared form (reported).
    pub fn torsion_square(&self, t: &Tolerances) -> Result<Vec<VerificationReport>> {
        let inputs = self.inputs()?;
        let sq = inputs.iter().map(identities::torsion_square).collect();
        let lit = inputs.iter().map(identities::torsion_square_literal).collect();
        Ok(vec![
            self.report(TORSION_SQUARE, sq, t.square, t),
            VerificationReport::reported(TORSION_SQUARE_LITERAL, self.grid.clone(), lit, t.square),
        ])
    }

    /// Profile of `(1 − λκ)√|λ²κ*² − 1|`. `Pass` when its sample standard
    /// deviation exceeds `ratio_relative·|mean|`; a constant profile is
    /// `Reported` with the [`CONSTANT_RATIO`] note rather than failed.
    pub fn curvature_center_ratio(&self, t: &Tolerances) -> Result<VerificationReport> {
        let mut ratios = Vec::with_capacity(self.points.len());
        for p in &self.points {
            if p.c.kappa <= 0.0 || p.cstar.kappa <= 0.0 {
                return Err(GeometryError::VanishingCurvature { s: p.s, kappa: p.c.kappa.min(p.cstar.kappa) });
            }
            ratios.push(identities::curvature_center_distances(self.pair.lambda, p.c.kappa, p.cstar.kappa).ratio);
        }
        let (mean, std) = mean_std(&ratios);
        let threshold = t.ratio_relative * mean.abs();
        let mut r = VerificationReport::reported(CURVATURE_CENTER_RATIO, self.grid.clone(), ratios, threshold);
        if std > threshold {
            r.verdict = Verdict::Pass;
            r = r.with_note(format!("standard deviation {std:e}"));
        } else {
            r = r.with_note(format!("{CONSTANT_RATIO}: standard deviation {std:e}"));
        }
        Ok(r)
    }

    /// Every report, in a fixed order.
    pub fn all(&self, t: &Tolerances) -> Result<Vec<VerificationReport>> {
        let mut out = vec![self.distance(t), self.torsion_product(t)?, self.linear_relation(t)?, self.mu_constancy()?];
        out.extend(self.frame_relations(t)?);
        out.extend(self.torsion_square(t)?);
        out.push(self.curvature_center_ratio(t)?);
        out.extend(crate::indicatrix::indicatrix_relations(self, t)?.reports);
        Ok(out)
    }
}

fn spread(v: &[f64]) -> f64 {
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// Mean and sample standard deviation.
pub fn mean_std(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    if v.len() < 2 {
        return (mean, 0.0);
    }
    let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

pub fn verify_distance(pair: &MannheimPair, grid: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(pair, grid)?.distance(&Tolerances::default()))
}

pub fn verify_torsion_relation(pair: &MannheimPair, grid: usize) -> Result<VerificationReport> {
    Verifier::new(pair, grid)?.torsion_product(&Tolerances::default())
}

pub fn verify_linear_relation(pair: &MannheimPair, grid: usize) -> Result<VerificationReport> {
    Verifier::new(pair, grid)?.linear_relation(&Tolerances::default())
}

pub fn verify_frame_relations(pair: &MannheimPair, grid: usize) -> Result<Vec<VerificationReport>> {
    Verifier::new(pair, grid)?.frame_relations(&Tolerances::default())
}

pub fn verify_torsion_square(pair: &MannheimPair, grid: usize) -> Result<Vec<VerificationReport>> {
    Verifier::new(pair, grid)?.torsion_square(&Tolerances::default())
}

pub fn verify_ratio_nonconstant(pair: &MannheimPair, grid: usize) -> Result<VerificationReport> {
    Verifier::new(pair, grid)?.curvature_center_ratio(&Tolerances::default())
}

/// Distances to the curvature centers at `s` and their product ratio.
pub fn curvature_center_ratio(pair: &MannheimPair, s: f64) -> Result<identities::CurvatureCenterDistances> {
    let (fc, fs) = pair.frames(s)?;
    Ok(identities::curvature_center_distances(pair.lambda, fc.kappa.value(), fs.kappa.value()))
}

/// All reports for a pair.
pub fn verify_all(pair: &MannheimPair, grid: usize, tol: &Tolerances) -> Result<Vec<VerificationReport>> {
    Verifier::new(pair, grid)?.all(tol)
}

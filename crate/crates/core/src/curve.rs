//! Parametric curves in Minkowski 3-space.
//!
//! A [`Curve`] wraps a [`CurveMap`], which returns the Taylor expansion of the
//! position at a parameter value. Closed-form curves give exact expansions of
//! any order; curves known only through a position function get derivatives
//! from fourth-order finite differences.

use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::jet::{Jet, JET_LEN, MAX_ORDER};
use crate::lorentz::{causal_character, CausalCharacter, JetVec, Vec3L};
use crate::numeric::{adaptive_simpson, fd_weights, stencil_offsets, MonotoneCubic, DEFAULT_QUAD_TOLERANCE};

/// Rows of the arc-length table used for unit-speed reparametrization.
pub const DEFAULT_TABLE_SIZE: usize = 1024;

/// Allowed deviation of `|⟨α′, α′⟩|^(1/2)` from 1 for unit-speed curves.
pub const DEFAULT_UNIT_SPEED_TOLERANCE: f64 = 1e-8;

/// Points used when validating or classifying a curve without an explicit grid.
pub const DEFAULT_VALIDATION_GRID: usize = 65;

/// Source of position expansions for a [`Curve`].
pub trait CurveMap: Send + Sync {
    /// Taylor expansion at `t`, with derivatives valid through `order`.
    fn jet(&self, t: f64, order: usize) -> Result<JetVec>;

    fn position(&self, t: f64) -> Result<Vec3L> {
        Ok(self.jet(t, 0)?.value())
    }

    /// Highest derivative order this map can deliver.
    fn max_order(&self) -> usize;
}

#[derive(Clone)]
pub struct Curve {
    domain: (f64, f64),
    label: String,
    map: Arc<dyn CurveMap>,
    unit_speed: bool,
    reparam: Option<Arc<ArcLengthMap>>,
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Curve")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .field("unit_speed", &self.unit_speed)
            .field("max_order", &self.map.max_order())
            .finish()
    }
}

impl Curve {
    /// Wraps an arbitrary map. `unit_speed` is trusted, not checked.
    pub fn from_map(domain: (f64, f64), label: impl Into<String>, map: Arc<dyn CurveMap>, unit_speed: bool) -> Result<Self> {
        check_domain(domain)?;
        Ok(Curve { domain, label: label.into(), map, unit_speed, reparam: None })
    }

    /// Curve given in closed form on jets; derivatives of every order are exact.
    pub fn from_jet_fn<F>(domain: (f64, f64), label: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn(Jet) -> JetVec + Send + Sync + 'static,
    {
        Curve::from_map(domain, label, Arc::new(ClosedForm { f }), false)
    }

    /// Curve known only by its positions; derivatives by finite differences.
    pub fn from_fn<F>(domain: (f64, f64), label: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Vec3L + Send + Sync + 'static,
    {
        Curve::from_map(domain, label, Arc::new(FiniteDiff { domain, f }), false)
    }

    /// Interpolating curve through samples (local degree-5 Lagrange polynomials).
    pub fn from_samples(samples: &CurveSamples, label: impl Into<String>) -> Result<Self> {
        samples.validate()?;
        if samples.len() < SAMPLE_STENCIL {
            return Err(GeometryError::InvalidSamples(format!(
                "at least {SAMPLE_STENCIL} samples are needed, got {}",
                samples.len()
            )));
        }
        let domain = (samples.parameters[0], *samples.parameters.last().unwrap());
        let map = SampledMap { t: samples.parameters.clone(), p: samples.points.clone() };
        Curve::from_map(domain, label, Arc::new(map), false)
    }

    /// Marks the curve as arc-length parametrized without checking.
    pub fn assume_unit_speed(mut self) -> Self {
        self.unit_speed = true;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_unit_speed(&self) -> bool {
        self.unit_speed
    }

    pub fn max_order(&self) -> usize {
        self.map.max_order()
    }

    /// For a reparametrized curve, the table linking its arc length to the
    /// parameter of the curve it was built from.
    pub fn arclength_map(&self) -> Option<&Arc<ArcLengthMap>> {
        self.reparam.as_ref()
    }

    /// Clamps `t` into the domain, rejecting values farther out than rounding.
    pub fn check_param(&self, t: f64) -> Result<f64> {
        let (a, b) = self.domain;
        let slack = 1e-12 * a.abs().max(b.abs()).max(1.0);
        if !(t >= a - slack && t <= b + slack) {
            return Err(GeometryError::OutOfDomain { t, a, b });
        }
        Ok(t.clamp(a, b))
    }

    pub fn jet(&self, t: f64, order: usize) -> Result<JetVec> {
        let available = self.map.max_order();
        if order > available {
            return Err(GeometryError::InsufficientSmoothness { needed: order, available });
        }
        let t = self.check_param(t)?;
        let j = self.map.jet(t, order)?;
        let valid = [j.x1, j.x2, j.x3].iter().all(|c| c.c[..=order].iter().all(|x| x.is_finite()));
        if !valid {
            return Err(GeometryError::NonFinite { t });
        }
        Ok(j)
    }

    pub fn position(&self, t: f64) -> Result<Vec3L> {
        let t = self.check_param(t)?;
        let p = self.map.position(t)?;
        if !p.is_finite() {
            return Err(GeometryError::NonFinite { t });
        }
        Ok(p)
    }

    /// `k`-th derivative of the position at `t`.
    pub fn derivative(&self, t: f64, k: usize) -> Result<Vec3L> {
        Ok(self.jet(t, k)?.derivative(k))
    }

    pub fn speed(&self, t: f64) -> Result<f64> {
        Ok(self.derivative(t, 1)?.norm())
    }

    /// Uniform grid of `n` parameters spanning the domain.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        uniform_grid(self.domain, n)
    }

    /// Common causal character of the tangent over a uniform grid.
    pub fn classify(&self, grid_size: usize) -> Result<CausalCharacter> {
        if grid_size < 2 {
            return Err(GeometryError::InvalidArgument("grid size must be at least 2".into()));
        }
        let mut common = None;
        for t in self.grid(grid_size) {
            let c = causal_character(self.derivative(t, 1)?);
            match c {
                CausalCharacter::Null | CausalCharacter::Zero => return Err(GeometryError::NullTangent { t }),
                _ => {}
            }
            match common {
                None => common = Some(c),
                Some(prev) if prev != c => return Err(GeometryError::MixedCausalCharacter { t }),
                _ => {}
            }
        }
        Ok(common.expect("grid is non-empty"))
    }

    pub fn arclength(&self, t0: f64, t1: f64) -> Result<f64> {
        self.arclength_with(t0, t1, DEFAULT_QUAD_TOLERANCE)
    }

    /// Pseudo arc length `∫ |⟨α′, α′⟩|^(1/2)` to absolute tolerance `tol`.
    pub fn arclength_with(&self, t0: f64, t1: f64, tol: f64) -> Result<f64> {
        let t0 = self.check_param(t0)?;
        let t1 = self.check_param(t1)?;
        adaptive_simpson(|t| self.nonnull_speed(t), t0, t1, tol)
    }

    fn nonnull_speed(&self, t: f64) -> Result<f64> {
        let d = self.derivative(t, 1)?;
        match causal_character(d) {
            CausalCharacter::Null | CausalCharacter::Zero => Err(GeometryError::NullTangent { t }),
            _ => Ok(d.norm()),
        }
    }

    /// Largest `|speed − 1|` over a uniform grid.
    pub fn unit_speed_deviation(&self, grid_size: usize) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for t in self.grid(grid_size.max(2)) {
            worst = worst.max((self.speed(t)? - 1.0).abs());
        }
        Ok(worst)
    }

    /// Marks the curve unit-speed after checking it on a grid.
    pub fn into_unit_speed(self, grid_size: usize, tol: f64) -> Result<Self> {
        if self.unit_speed {
            return Ok(self);
        }
        for t in self.grid(grid_size.max(2)) {
            let v = self.speed(t)?;
            if (v - 1.0).abs() > tol {
                return Err(GeometryError::NotUnitSpeed { s: t, speed: v });
            }
        }
        Ok(self.assume_unit_speed())
    }

    /// Arc-length reparametrization from a table of `table_size` rows.
    ///
    /// The new parameter is `s = a + ∫_a^t speed`, so a curve that is already
    /// unit-speed keeps its parameter values.
    pub fn reparametrize_unit(&self, table_size: usize) -> Result<Curve> {
        self.classify(table_size.clamp(2, DEFAULT_TABLE_SIZE))?;
        let map = Arc::new(ArcLengthMap::new(self.clone(), table_size, DEFAULT_QUAD_TOLERANCE)?);
        let a = self.domain.0;
        let domain = (a, a + map.total_length());
        let reparam = Reparametrized { map: map.clone() };
        let curve = Curve {
            domain,
            label: format!("{} (unit speed)", self.label),
            map: Arc::new(reparam),
            unit_speed: true,
            reparam: Some(map),
        };
        // speed is 1 at jet level; this guards against a broken table
        let dev = curve.unit_speed_deviation(DEFAULT_VALIDATION_GRID)?;
        if dev > DEFAULT_UNIT_SPEED_TOLERANCE {
            return Err(GeometryError::NotUnitSpeed { s: f64::NAN, speed: 1.0 + dev });
        }
        Ok(curve)
    }

    pub fn sample(&self, n: usize) -> Result<CurveSamples> {
        if n < 2 {
            return Err(GeometryError::InvalidArgument("sample count must be at least 2".into()));
        }
        let parameters = self.grid(n);
        let points = parameters.iter().map(|&t| self.position(t)).collect::<Result<Vec<_>>>()?;
        Ok(CurveSamples { parameters, points, frames: None })
    }
}

fn check_domain((a, b): (f64, f64)) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(GeometryError::InvalidArgument(format!("invalid domain [{a}, {b}]")));
    }
    Ok(())
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn uniform_grid((a, b): (f64, f64), n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => (0..n)
            .map(|i| if i == n - 1 { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

pub fn speed(c: &Curve, t: f64) -> Result<f64> {
    c.speed(t)
}

pub fn classify_curve(c: &Curve, grid_size: usize) -> Result<CausalCharacter> {
    c.classify(grid_size)
}

pub fn arclength(c: &Curve, t0: f64, t1: f64) -> Result<f64> {
    c.arclength(t0, t1)
}

pub fn reparametrize_unit(c: &Curve, table_size: usize) -> Result<Curve> {
    c.reparametrize_unit(table_size)
}

pub fn sample(c: &Curve, n: usize) -> Result<CurveSamples> {
    c.sample(n)
}

struct ClosedForm<F> {
    f: F,
}

impl<F> CurveMap for ClosedForm<F>
where
    F: Fn(Jet) -> JetVec + Send + Sync,
{
    fn jet(&self, t: f64, _order: usize) -> Result<JetVec> {
        Ok((self.f)(Jet::variable(t)))
    }

    fn max_order(&self) -> usize {
        MAX_ORDER
    }
}

/// Finite-difference step for derivative order `k` (1 to 3), relative to `max(1, |t|)`.
///
/// Balances truncation `O(h^4)` of the fourth-order stencils against roundoff
/// `O(ε / h^k)`.
pub fn fd_step(k: usize) -> f64 {
    f64::EPSILON.powf(1.0 / (4 + k) as f64)
}

/// Highest order available from finite differences.
pub const FD_MAX_ORDER: usize = 3;

struct FiniteDiff<F> {
    domain: (f64, f64),
    f: F,
}

impl<F> CurveMap for FiniteDiff<F>
where
    F: Fn(f64) -> Vec3L + Send + Sync,
{
    fn jet(&self, t: f64, order: usize) -> Result<JetVec> {
        let mut d = [Vec3L::ZERO; FD_MAX_ORDER + 1];
        d[0] = (self.f)(t);
        for (k, dk) in d.iter_mut().enumerate().take(order.min(FD_MAX_ORDER) + 1).skip(1) {
            *dk = fd_derivative(&self.f, self.domain, t, k);
        }
        Ok(jet_from_derivatives(&d[..=order.min(FD_MAX_ORDER)]))
    }

    fn position(&self, t: f64) -> Result<Vec3L> {
        Ok((self.f)(t))
    }

    fn max_order(&self) -> usize {
        FD_MAX_ORDER
    }
}

/// Fourth-order finite-difference derivative of `f` at `t`, one-sided near
/// the ends of `domain`.
pub fn fd_derivative<F: Fn(f64) -> Vec3L>(f: &F, (a, b): (f64, f64), t: f64, k: usize) -> Vec3L {
    let width = (k + 4) as f64;
    let mut h = fd_step(k) * t.abs().max(1.0);
    h = h.min((b - a) / width);
    let offsets = stencil_offsets(k, (a - t) / h, (b - t) / h);
    let nodes: Vec<f64> = offsets.iter().map(|o| o * h).collect();
    let w = fd_weights(0.0, &nodes, k);
    nodes.iter().zip(&w).fold(Vec3L::ZERO, |acc, (x, w)| acc + *w * f(t + x))
}

fn jet_from_derivatives(d: &[Vec3L]) -> JetVec {
    let comp = |g: fn(&Vec3L) -> f64| Jet::from_derivatives(&d.iter().map(g).collect::<Vec<_>>());
    JetVec::new(comp(|v| v.x1), comp(|v| v.x2), comp(|v| v.x3))
}

const SAMPLE_STENCIL: usize = 6;

struct SampledMap {
    t: Vec<f64>,
    p: Vec<Vec3L>,
}

impl CurveMap for SampledMap {
    fn jet(&self, t: f64, _order: usize) -> Result<JetVec> {
        let n = self.t.len();
        let seg = match self.t.partition_point(|&x| x <= t) {
            0 => 0,
            p => (p - 1).min(n - 2),
        };
        let start = seg.saturating_sub(SAMPLE_STENCIL / 2 - 1).min(n - SAMPLE_STENCIL);
        let nodes = &self.t[start..start + SAMPLE_STENCIL];
        let x = Jet::variable(t);
        let mut out = JetVec::default();
        for (i, &ti) in nodes.iter().enumerate() {
            let mut basis = Jet::constant(1.0);
            for (j, &tj) in nodes.iter().enumerate() {
                if i != j {
                    basis = basis * ((x - tj) / (ti - tj));
                }
            }
            let p = self.p[start + i];
            out = out + JetVec::new(basis * p.x1, basis * p.x2, basis * p.x3);
        }
        Ok(out)
    }

    fn max_order(&self) -> usize {
        SAMPLE_STENCIL - 1
    }
}

/// Tabulated arc length of a curve with its inverse.
///
/// Arc length is measured from the start `a` of the base domain and offset by
/// `a`. The inverse starts from a monotone cubic fit of the table and is
/// polished by Newton steps on the quadrature.
pub struct ArcLengthMap {
    base: Curve,
    knots_t: Vec<f64>,
    knots_s: Vec<f64>,
    inverse: MonotoneCubic,
    tolerance: f64,
}

impl fmt::Debug for ArcLengthMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArcLengthMap")
            .field("base", &self.base)
            .field("rows", &self.knots_t.len())
            .field("total_length", &self.total_length())
            .finish()
    }
}

impl ArcLengthMap {
    pub fn new(base: Curve, table_size: usize, tolerance: f64) -> Result<Self> {
        let n = table_size.max(2);
        let knots_t = base.grid(n);
        let per_segment = tolerance / (n - 1) as f64;
        let mut knots_s = Vec::with_capacity(n);
        let mut acc = base.domain.0;
        knots_s.push(acc);
        for w in knots_t.windows(2) {
            acc += adaptive_simpson(|t| base.nonnull_speed(t), w[0], w[1], per_segment)?;
            knots_s.push(acc);
        }
        let inverse = MonotoneCubic::new(knots_s.clone(), knots_t.clone());
        Ok(ArcLengthMap { base, knots_t, knots_s, inverse, tolerance: per_segment })
    }

    pub fn base(&self) -> &Curve {
        &self.base
    }

    pub fn total_length(&self) -> f64 {
        self.knots_s.last().unwrap() - self.knots_s[0]
    }

    pub fn speed_at(&self, t: f64) -> Result<f64> {
        self.base.nonnull_speed(t)
    }

    /// Arc-length parameter of base parameter `t`.
    pub fn arclength_at(&self, t: f64) -> Result<f64> {
        let t = self.base.check_param(t)?;
        let i = nearest(&self.knots_t, t);
        Ok(self.knots_s[i] + adaptive_simpson(|x| self.base.nonnull_speed(x), self.knots_t[i], t, self.tolerance)?)
    }

    /// Base parameter at arc-length parameter `s`.
    pub fn param_at(&self, s: f64) -> Result<f64> {
        let (a, b) = self.base.domain;
        let mut t = self.inverse.eval(s).clamp(a, b);
        for _ in 0..20 {
            let step = (self.arclength_at(t)? - s) / self.speed_at(t)?;
            let next = (t - step).clamp(a, b);
            let done = (next - t).abs() <= 4.0 * f64::EPSILON * t.abs().max(1.0);
            t = next;
            if done {
                break;
            }
        }
        Ok(t)
    }

    /// Expansion of the base parameter `t(s0 + h)` from `dt/ds = 1/speed(t)`.
    pub fn param_jet(&self, s0: f64, order: usize) -> Result<Jet> {
        let t0 = self.param_at(s0)?;
        let base_jet = self.base.jet(t0, order.max(1))?;
        let v = base_jet.differentiate();
        let speed = v.inner(&v).abs().sqrt();
        let mut delta = Jet::constant(0.0);
        for _ in 0..JET_LEN {
            delta = speed.compose(&delta).recip().integrate();
        }
        let mut out = delta;
        out.c[0] = t0;
        Ok(out)
    }
}

fn nearest(knots: &[f64], v: f64) -> usize {
    let p = knots.partition_point(|&x| x < v);
    if p == 0 {
        0
    } else if p == knots.len() || v - knots[p - 1] <= knots[p] - v {
        p - 1
    } else {
        p
    }
}

struct Reparametrized {
    map: Arc<ArcLengthMap>,
}

impl CurveMap for Reparametrized {
    fn jet(&self, s: f64, order: usize) -> Result<JetVec> {
        let t = self.map.param_jet(s, order)?;
        let t0 = t.value();
        let mut delta = t;
        delta.c[0] = 0.0;
        Ok(self.map.base.jet(t0, order)?.compose(&delta))
    }

    fn position(&self, s: f64) -> Result<Vec3L> {
        self.map.base.position(self.map.param_at(s)?)
    }

    fn max_order(&self) -> usize {
        self.map.base.max_order()
    }
}

/// Positions (and optionally frames) of a curve at increasing parameters.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CurveSamples {
    pub parameters: Vec<f64>,
    pub points: Vec<Vec3L>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frames: Option<Vec<crate::frenet::FrenetFrame>>,
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    t: f64,
    x1: f64,
    x2: f64,
    x3: f64,
}

impl CurveSamples {
    pub fn len(&self) -> usize {
        self.parameters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parameters.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.parameters.len() != self.points.len() {
            return Err(GeometryError::InvalidSamples("parameter and point counts differ".into()));
        }
        if let Some(f) = &self.frames {
            if f.len() != self.points.len() {
                return Err(GeometryError::InvalidSamples("frame count differs from point count".into()));
            }
        }
        if self.parameters.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(GeometryError::InvalidSamples("parameters must be strictly increasing".into()));
        }
        if self.parameters.iter().any(|t| !t.is_finite()) || self.points.iter().any(|p| !p.is_finite()) {
            return Err(GeometryError::InvalidSamples("non-finite value".into()));
        }
        Ok(())
    }

    /// Reads `t,x1,x2,x3` rows; the header is required.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["t", "x1", "x2", "x3"] {
            return Err(GeometryError::InvalidSamples(format!(
                "expected header t,x1,x2,x3, found {}",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut out = CurveSamples::default();
        for row in rdr.deserialize() {
            let row: CsvRow = row?;
            out.parameters.push(row.t);
            out.points.push(Vec3L::new(row.x1, row.x2, row.x3));
        }
        out.validate()?;
        Ok(out)
    }

    pub fn read_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        CurveSamples::read_csv(std::fs::File::open(path)?)
    }

    /// Writes `t,x1,x2,x3` rows with 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,x1,x2,x3")?;
        for (t, p) in self.parameters.iter().zip(&self.points) {
            writeln!(w, "{},{},{},{}", fmt_f64(*t), fmt_f64(p.x1), fmt_f64(p.x2), fmt_f64(p.x3))?;
        }
        Ok(())
    }

    pub fn write_csv_path(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_csv(file)
    }
}

/// Scientific notation with 17 significant digits, exact for any `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn line(dir: Vec3L) -> Curve {
        Curve::from_jet_fn((0.0, 3.0), "line", move |t| {
            JetVec::new(t * dir.x1, t * dir.x2, t * dir.x3)
        })
        .unwrap()
    }

    fn hyperbolic_helix() -> Curve {
        Curve::from_jet_fn((0.0, 1.0), "helix", |s| {
            let (sh, ch) = s.sinh_cosh();
            JetVec::new(sh * 2.0, ch * 2.0, s * 3f64.sqrt())
        })
        .unwrap()
    }

    #[test]
    fn speed_and_arclength_of_simple_curves() {
        let c = line(Vec3L::new(0.0, 2.0, 0.0));
        assert_eq!(c.speed(1.0).unwrap(), 2.0);
        assert_relative_eq!(c.arclength(0.0, 3.0).unwrap(), 6.0, epsilon = 1e-12);
        assert_eq!(c.arclength(1.2, 1.2).unwrap(), 0.0);
        let h = hyperbolic_helix();
        assert_relative_eq!(h.speed(0.7).unwrap(), 1.0, epsilon = 1e-14);
        assert_relative_eq!(h.arclength(0.0, 1.0).unwrap(), 1.0, epsilon = 1e-10);
        assert!(matches!(c.speed(3.5), Err(GeometryError::OutOfDomain { .. })));
    }

    #[test]
    fn classification() {
        assert_eq!(hyperbolic_helix().classify(11).unwrap(), CausalCharacter::Timelike);
        assert_eq!(line(Vec3L::E2).classify(5).unwrap(), CausalCharacter::Spacelike);
        assert!(matches!(line(Vec3L::new(1.0, 1.0, 0.0)).classify(5), Err(GeometryError::NullTangent { .. })));
        let mixed = Curve::from_jet_fn((-1.0, 1.0), "mixed", |t| {
            JetVec::new(t * t, t * 0.6, Jet::constant(0.0))
        })
        .unwrap();
        assert!(matches!(mixed.classify(9), Err(GeometryError::MixedCausalCharacter { .. })));
    }

    #[test]
    fn finite_differences_match_closed_form() {
        let h = hyperbolic_helix();
        let fd = Curve::from_fn((0.0, 1.0), "helix-fd", |t| {
            Vec3L::new(2.0 * t.sinh(), 2.0 * t.cosh(), 3f64.sqrt() * t)
        })
        .unwrap();
        for &t in &[0.0, 0.013, 0.5, 0.99, 1.0] {
            for (k, tol) in [(1, 1e-10), (2, 1e-8), (3, 1e-6)] {
                let e = h.derivative(t, k).unwrap();
                let a = fd.derivative(t, k).unwrap();
                assert!((e - a).max_abs() < tol, "order {k} at {t}: {e} vs {a}");
            }
        }
        assert!(matches!(fd.derivative(0.5, 4), Err(GeometryError::InsufficientSmoothness { .. })));
    }

    #[test]
    fn reparametrization_gives_unit_speed_and_same_points() {
        let c = line(Vec3L::new(0.0, 2.0, 0.0));
        let u = c.reparametrize_unit(DEFAULT_TABLE_SIZE).unwrap();
        assert_relative_eq!(u.domain().1, 6.0, epsilon = 1e-10);
        assert!(u.unit_speed_deviation(33).unwrap() < 1e-12);
        assert_relative_eq!(u.position(3.0).unwrap().x2, 3.0, epsilon = 1e-10);

        let bent = Curve::from_jet_fn((0.0, 2.0), "bent", |t| {
            JetVec::new(Jet::constant(0.0), t * 1.5, (t * 0.7).sin() * 3.0)
        })
        .unwrap();
        let u = bent.reparametrize_unit(DEFAULT_TABLE_SIZE).unwrap();
        let map = u.arclength_map().unwrap().clone();
        assert!(u.unit_speed_deviation(41).unwrap() < 1e-12);
        for &t in &[0.0, 0.3, 1.1, 2.0] {
            let s = map.arclength_at(t).unwrap();
            assert!((u.position(s).unwrap() - bent.position(t).unwrap()).max_abs() < 1e-8);
            assert_relative_eq!(map.param_at(s).unwrap(), t, epsilon = 1e-12);
        }
        assert_eq!(u.classify(9).unwrap(), bent.classify(9).unwrap());
    }

    #[test]
    fn reparametrized_jets_are_consistent_with_positions() {
        let bent = Curve::from_jet_fn((0.0, 2.0), "bent", |t| {
            JetVec::new(Jet::constant(0.0), t * 1.5, (t * 0.7).sin() * 3.0)
        })
        .unwrap();
        let u = bent.reparametrize_unit(256).unwrap();
        let fd = {
            let u = u.clone();
            Curve::from_fn(u.domain(), "fd", move |s| u.position(s).unwrap()).unwrap()
        };
        for &s in &[0.2, 1.0, 2.5] {
            for (k, tol) in [(1, 1e-8), (2, 1e-6), (3, 1e-4)] {
                let d = u.derivative(s, k).unwrap() - fd.derivative(s, k).unwrap();
                assert!(d.max_abs() < tol, "order {k} at {s}: {d}");
            }
        }
    }

    #[test]
    fn samples_round_trip_through_csv() {
        let h = hyperbolic_helix();
        let s = h.sample(41).unwrap();
        assert_eq!(h.sample(2).unwrap().parameters, vec![0.0, 1.0]);
        assert!(h.sample(1).is_err());
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let back = CurveSamples::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, s);

        let c = Curve::from_samples(&s, "sampled").unwrap();
        let t = 0.537;
        assert!((c.position(t).unwrap() - h.position(t).unwrap()).max_abs() < 1e-9);
        assert!((c.derivative(t, 1).unwrap() - h.derivative(t, 1).unwrap()).max_abs() < 1e-7);

        let bad = "t,x,y,z\n0,0,0,0\n";
        assert!(CurveSamples::read_csv(bad.as_bytes()).is_err());
        let unordered = "t,x1,x2,x3\n1,0,0,0\n0,0,0,0\n";
        assert!(matches!(CurveSamples::read_csv(unordered.as_bytes()), Err(GeometryError::InvalidSamples(_))));
    }
}

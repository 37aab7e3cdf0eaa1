//! Quadrature, monotone interpolation and finite-difference stencils.

use crate::error::Result;

/// Default absolute tolerance for arc-length quadrature.
pub const DEFAULT_QUAD_TOLERANCE: f64 = 1e-10;

const MAX_SIMPSON_DEPTH: u32 = 48;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a)?;
    let fb = f(b)?;
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(&mut f, a, b, fa, fm, fb, whole, tol, MAX_SIMPSON_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F>(
    f: &mut F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    Ok(simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

/// Piecewise cubic Hermite interpolant with Fritsch–Carlson slopes.
///
/// Monotone data yields a monotone interpolant, so the inverse of a
/// tabulated arc-length function stays a bijection.
#[derive(Clone, Debug)]
pub struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    m: Vec<f64>,
}

impl MonotoneCubic {
    /// `x` must be strictly increasing and the same length as `y` (at least 2).
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        assert!(x.len() >= 2 && x.len() == y.len());
        let n = x.len();
        let d: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i])).collect();
        let mut m = vec![0.0; n];
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            m[i] = if d[i - 1] * d[i] <= 0.0 {
                0.0
            } else {
                // weighted harmonic mean keeps the interpolant monotone on uneven grids
                let h0 = x[i] - x[i - 1];
                let h1 = x[i + 1] - x[i];
                let w1 = 2.0 * h1 + h0;
                let w2 = h1 + 2.0 * h0;
                (w1 + w2) / (w1 / d[i - 1] + w2 / d[i])
            };
        }
        MonotoneCubic { x, y, m }
    }

    pub fn knots(&self) -> &[f64] {
        &self.x
    }

    pub fn values(&self) -> &[f64] {
        &self.y
    }

    /// Index `i` with `x[i] <= v <= x[i+1]`, clamped to the table.
    pub fn segment(&self, v: f64) -> usize {
        match self.x.partition_point(|&xi| xi <= v) {
            0 => 0,
            p => (p - 1).min(self.x.len() - 2),
        }
    }

    pub fn eval(&self, v: f64) -> f64 {
        let i = self.segment(v);
        let h = self.x[i + 1] - self.x[i];
        let t = (v - self.x[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.y[i] + h10 * h * self.m[i] + h01 * self.y[i + 1] + h11 * h * self.m[i + 1]
    }
}

/// Finite-difference weights for the `order`-th derivative at `x0` from
/// samples at `nodes` (Fornberg's recursion).
pub fn fd_weights(x0: f64, nodes: &[f64], order: usize) -> Vec<f64> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; order + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[order]).collect()
}

/// Integer offsets (in units of the step) of a fourth-order stencil for the
/// `order`-th derivative, shifted so every node stays inside `[lo, hi]`
/// (also in step units relative to the evaluation point).
pub fn stencil_offsets(order: usize, lo: f64, hi: f64) -> Vec<f64> {
    // central stencils: 5 points for orders 1-2, 7 for order 3
    let half = if order >= 3 { 3i32 } else { 2 };
    if -(half as f64) >= lo && (half as f64) <= hi {
        return (-half..=half).map(f64::from).collect();
    }
    // one-sided: order + 4 nodes keeps fourth-order accuracy
    let width = (order + 4) as i32;
    let start = if lo > -(half as f64) {
        lo.ceil() as i32
    } else {
        hi.floor() as i32 - (width - 1)
    };
    (start..start + width).map(f64::from).collect()
}

//! Truncated Taylor series ("jets") in one variable.
//!
//! A [`Jet`] holds the normalized Taylor coefficients `f(t0 + h) = Σ c[k] h^k`
//! up to degree `JET_LEN - 1`. Arithmetic propagates all coefficients, so
//! evaluating a curve on a jet yields its exact derivatives at `t0`. Offsets,
//! reparametrizations and the Frenet ODE are all composed this way, which
//! keeps third derivatives (torsion) free of finite-difference noise.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of stored coefficients (degrees 0 through 7).
pub const JET_LEN: usize = 8;

/// Highest derivative order a jet carries.
pub const MAX_ORDER: usize = JET_LEN - 1;

const FACTORIAL: [f64; JET_LEN] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub c: [f64; JET_LEN],
}

impl Default for Jet {
    fn default() -> Self {
        Self::constant(0.0)
    }
}

impl Jet {
    pub const fn constant(v: f64) -> Self {
        let mut c = [0.0; JET_LEN];
        c[0] = v;
        Jet { c }
    }

    /// The independent variable `t0 + h`.
    pub const fn variable(t0: f64) -> Self {
        let mut c = [0.0; JET_LEN];
        c[0] = t0;
        c[1] = 1.0;
        Jet { c }
    }

    pub fn from_coeffs(c: [f64; JET_LEN]) -> Self {
        Jet { c }
    }

    /// Builds a jet from plain derivatives `[f, f', f'', ...]`; missing orders are zero.
    pub fn from_derivatives(d: &[f64]) -> Self {
        let mut c = [0.0; JET_LEN];
        for (k, v) in d.iter().enumerate().take(JET_LEN) {
            c[k] = v / FACTORIAL[k];
        }
        Jet { c }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `k`-th derivative at the expansion point.
    #[inline]
    pub fn derivative(&self, k: usize) -> f64 {
        self.c[k] * FACTORIAL[k]
    }

    /// Series of the derivative; the top coefficient becomes zero.
    pub fn differentiate(&self) -> Jet {
        let mut c = [0.0; JET_LEN];
        for (k, ck) in c.iter_mut().take(MAX_ORDER).enumerate() {
            *ck = self.c[k + 1] * (k + 1) as f64;
        }
        Jet { c }
    }

    /// Antiderivative with zero constant term; the top input coefficient is dropped.
    pub fn integrate(&self) -> Jet {
        let mut c = [0.0; JET_LEN];
        for k in 0..MAX_ORDER {
            c[k + 1] = self.c[k] / (k + 1) as f64;
        }
        Jet { c }
    }

    pub fn scale(&self, s: f64) -> Jet {
        let mut c = self.c;
        c.iter_mut().for_each(|x| *x *= s);
        Jet { c }
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    pub fn recip(&self) -> Jet {
        Jet::constant(1.0) / *self
    }

    pub fn sqrt(&self) -> Jet {
        let mut r = [0.0; JET_LEN];
        r[0] = self.c[0].sqrt();
        for k in 1..JET_LEN {
            let mut acc = self.c[k];
            for j in 1..k {
                acc -= r[j] * r[k - j];
            }
            r[k] = acc / (2.0 * r[0]);
        }
        Jet { c: r }
    }

    /// `|f|` taken on the sign of the constant term.
    pub fn abs(&self) -> Jet {
        if self.c[0] < 0.0 {
            -*self
        } else {
            *self
        }
    }

    pub fn exp(&self) -> Jet {
        let mut e = [0.0; JET_LEN];
        e[0] = self.c[0].exp();
        for k in 1..JET_LEN {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * self.c[j] * e[k - j];
            }
            e[k] = acc / k as f64;
        }
        Jet { c: e }
    }

    /// Returns `(sin f, cos f)`.
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let mut s = [0.0; JET_LEN];
        let mut c = [0.0; JET_LEN];
        s[0] = self.c[0].sin();
        c[0] = self.c[0].cos();
        for k in 1..JET_LEN {
            let (mut as_, mut ac) = (0.0, 0.0);
            for j in 1..=k {
                let w = j as f64 * self.c[j];
                as_ += w * c[k - j];
                ac += w * s[k - j];
            }
            s[k] = as_ / k as f64;
            c[k] = -ac / k as f64;
        }
        (Jet { c: s }, Jet { c })
    }

    /// Returns `(sinh f, cosh f)`.
    pub fn sinh_cosh(&self) -> (Jet, Jet) {
        let mut s = [0.0; JET_LEN];
        let mut c = [0.0; JET_LEN];
        s[0] = self.c[0].sinh();
        c[0] = self.c[0].cosh();
        for k in 1..JET_LEN {
            let (mut as_, mut ac) = (0.0, 0.0);
            for j in 1..=k {
                let w = j as f64 * self.c[j];
                as_ += w * c[k - j];
                ac += w * s[k - j];
            }
            s[k] = as_ / k as f64;
            c[k] = ac / k as f64;
        }
        (Jet { c: s }, Jet { c })
    }

    pub fn sin(&self) -> Jet {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet {
        self.sin_cos().1
    }

    pub fn sinh(&self) -> Jet {
        self.sinh_cosh().0
    }

    pub fn cosh(&self) -> Jet {
        self.sinh_cosh().1
    }

    pub fn powi(&self, n: u32) -> Jet {
        let mut base = *self;
        let mut acc = Jet::constant(1.0);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Evaluates the series `self` (expanded at some `t0`) at `t0 + delta`,
    /// where `delta` has zero constant term.
    pub fn compose(&self, delta: &Jet) -> Jet {
        debug_assert!(delta.c[0] == 0.0);
        let mut r = Jet::constant(self.c[MAX_ORDER]);
        for k in (0..MAX_ORDER).rev() {
            r = r * *delta;
            r.c[0] += self.c[k];
        }
        r
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(o.c) {
            *a += b;
        }
        Jet { c }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(o.c) {
            *a -= b;
        }
        Jet { c }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut c = [0.0; JET_LEN];
        for i in 0..JET_LEN {
            if self.c[i] == 0.0 {
                continue;
            }
            for j in 0..JET_LEN - i {
                c[i + j] += self.c[i] * o.c[j];
            }
        }
        Jet { c }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        let mut q = [0.0; JET_LEN];
        for k in 0..JET_LEN {
            let mut acc = self.c[k];
            for j in 1..=k {
                acc -= o.c[j] * q[k - j];
            }
            q[k] = acc / o.c[0];
        }
        Jet { c: q }
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, o: f64) -> Jet {
        self.c[0] += o;
        self
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(mut self, o: f64) -> Jet {
        self.c[0] -= o;
        self
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, o: f64) -> Jet {
        self.scale(o)
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        o.scale(self)
    }
}

impl Div<f64> for Jet {
    type Output = Jet;
    fn div(self, o: f64) -> Jet {
        self.scale(1.0 / o)
    }
}

#![allow(dead_code)]

use mannheim_core::builtin::{spacelike_hyperbolic_helix, timelike_hyperbolic_helix};
use mannheim_core::curve::Curve;
use mannheim_core::frenet::{frenet_synthesize, FnProfile, FrameKind, FrenetFrame};
use mannheim_core::jet::Jet;
use mannheim_core::lorentz::Vec3L;
use mannheim_core::mannheim::{MannheimPair, MannheimPairType};
use rand::Rng;

pub mod frozen;

pub const EXAMPLE_LAMBDA: f64 = 20.0;

pub fn example_pair(n: u8) -> MannheimPair {
    let cstar = match n {
        1 => spacelike_hyperbolic_helix(),
        2 => timelike_hyperbolic_helix(),
        _ => panic!("no example {n}"),
    };
    MannheimPair::from_partner(&cstar, EXAMPLE_LAMBDA).unwrap()
}

/// A synthesized curve satisfying the collinearity condition exactly for the
/// returned `λ`, with non-constant curvature.
pub fn genuine_curve(t: MannheimPairType) -> Option<(Curve, f64)> {
    type Profile = fn(Jet) -> Jet;
    let (kind, kappa, tau, lambda): (FrameKind, Profile, Profile, f64) = match t {
        // κ = −(κ² − τ²)
        MannheimPairType::Type2 => (
            FrameKind::TimelikeCurve,
            |s| s.sin() * 0.3 + 2.0,
            |s| {
                let k = s.sin() * 0.3 + 2.0;
                (k * k + k).sqrt()
            },
            -1.0,
        ),
        // κ = κ² + τ²
        MannheimPairType::Type3 => (
            FrameKind::SpacelikeCurveEpsMinus,
            |s| s.sin() * 0.1 + 0.5,
            |s| {
                let k = s.sin() * 0.1 + 0.5;
                (k - k * k).sqrt()
            },
            1.0,
        ),
        // κ = −κ² + τ²
        MannheimPairType::Type5 => (
            FrameKind::SpacelikeCurveEpsPlus,
            |s| s.sin() * 0.2 + 1.0,
            |s| {
                let k = s.sin() * 0.2 + 1.0;
                (k + k * k).sqrt()
            },
            1.0,
        ),
        _ => return None,
    };
    let c = frenet_synthesize(kind, FnProfile(kappa), FnProfile(tau), &FrenetFrame::standard(kind), Vec3L::ZERO, (0.0, 1.0), 1e-3)
        .unwrap();
    Some((c, lambda))
}

pub fn genuine_pair(t: MannheimPairType) -> Option<MannheimPair> {
    let (c, lambda) = genuine_curve(t)?;
    Some(MannheimPair::from_curve(&c, lambda).unwrap())
}

/// Reference recursive-descent recognizer and evaluator over characters,
/// written independently of the library parser.
pub mod oracle {
    pub struct P<'a> {
        c: Vec<char>,
        i: usize,
        s: f64,
        divided_by_zero: bool,
        _src: &'a str,
    }

    /// `None` on rejection; `Some(None)` when a division by zero occurs.
    pub fn eval(src: &str, s: f64) -> Option<Option<f64>> {
        let mut p = P { c: src.chars().collect(), i: 0, s, divided_by_zero: false, _src: src };
        let v = p.expr()?;
        p.ws();
        if p.i == p.c.len() {
            Some(if p.divided_by_zero { None } else { Some(v) })
        } else {
            None
        }
    }

    impl P<'_> {
        fn ws(&mut self) {
            while self.i < self.c.len() && self.c[self.i].is_whitespace() {
                self.i += 1;
            }
        }

        fn peek(&mut self) -> Option<char> {
            self.ws();
            self.c.get(self.i).copied()
        }

        fn expr(&mut self) -> Option<f64> {
            let mut v = self.term()?;
            while let Some(ch) = self.peek() {
                if ch == '+' || ch == '-' {
                    self.i += 1;
                    let r = self.term()?;
                    v = if ch == '+' { v + r } else { v - r };
                } else {
                    break;
                }
            }
            Some(v)
        }

        fn term(&mut self) -> Option<f64> {
            let mut v = self.factor()?;
            while let Some(ch) = self.peek() {
                if ch == '*' || ch == '/' {
                    self.i += 1;
                    let r = self.factor()?;
                    if ch == '/' && r == 0.0 {
                        self.divided_by_zero = true;
                    }
                    v = if ch == '*' { v * r } else { v / r };
                } else {
                    break;
                }
            }
            Some(v)
        }

        fn factor(&mut self) -> Option<f64> {
            let mut v = self.atom()?;
            while self.peek() == Some('^') {
                self.i += 1;
                self.ws();
                let start = self.i;
                while self.i < self.c.len() && self.c[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                if self.i == start {
                    return None;
                }
                // an exponent must be an integer literal
                if self.i < self.c.len() && (self.c[self.i] == '.' || self.c[self.i] == 'e' || self.c[self.i] == 'E') {
                    return None;
                }
                let n: String = self.c[start..self.i].iter().collect();
                let n: u32 = n.parse().ok()?;
                v = v.powi(n as i32);
            }
            Some(v)
        }

        fn atom(&mut self) -> Option<f64> {
            let ch = self.peek()?;
            if ch == '(' {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return None;
                }
                self.i += 1;
                return Some(v);
            }
            if ch.is_ascii_digit() || ch == '.' {
                return self.number();
            }
            if ch.is_alphabetic() {
                let start = self.i;
                while self.i < self.c.len() && self.c[self.i].is_alphabetic() {
                    self.i += 1;
                }
                let name: String = self.c[start..self.i].iter().collect();
                if name == "s" {
                    return Some(self.s);
                }
                let f: fn(f64) -> f64 = match name.as_str() {
                    "sin" => f64::sin,
                    "cos" => f64::cos,
                    "sinh" => f64::sinh,
                    "cosh" => f64::cosh,
                    "exp" => f64::exp,
                    _ => return None,
                };
                if self.peek() != Some('(') {
                    return None;
                }
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return None;
                }
                self.i += 1;
                return Some(f(v));
            }
            None
        }

        fn number(&mut self) -> Option<f64> {
            let start = self.i;
            let digits = |p: &mut Self| {
                let b = p.i;
                while p.i < p.c.len() && p.c[p.i].is_ascii_digit() {
                    p.i += 1;
                }
                p.i - b
            };
            let int = digits(self);
            let mut frac = 0;
            if self.i < self.c.len() && self.c[self.i] == '.' {
                self.i += 1;
                frac = digits(self);
                if int == 0 && frac == 0 {
                    return None;
                }
            }
            if int == 0 && frac == 0 {
                return None;
            }
            if self.i < self.c.len() && (self.c[self.i] == 'e' || self.c[self.i] == 'E') {
                self.i += 1;
                if self.i < self.c.len() && (self.c[self.i] == '+' || self.c[self.i] == '-') {
                    self.i += 1;
                }
                if digits(self) == 0 {
                    return None;
                }
            }
            let text: String = self.c[start..self.i].iter().collect();
            let v: f64 = text.parse().ok()?;
            v.is_finite().then_some(v)
        }
    }
}

const NUMBERS: &[&str] = &["1", "2", "0.5", ".25", "3e2", "1.5e-1", "7", "10"];
const FUNCS: &[&str] = &["sin", "cos", "sinh", "cosh", "exp"];
const NOISE: &[char] = &['s', '1', '.', 'e', '+', '-', '*', '/', '^', '(', ')', ' ', 'x', ','];

fn grammar<R: Rng>(rng: &mut R, depth: u32) -> String {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    let mut out = if leaf {
        if rng.gen_bool(0.5) { "s".to_string() } else { NUMBERS[rng.gen_range(0..NUMBERS.len())].to_string() }
    } else {
        match rng.gen_range(0..4) {
            0 => format!("{}({})", FUNCS[rng.gen_range(0..FUNCS.len())], grammar(rng, depth - 1)),
            1 => format!("({})", grammar(rng, depth - 1)),
            _ => {
                let op = ["+", "-", "*", "/"][rng.gen_range(0..4)];
                let sp = if rng.gen_bool(0.3) { " " } else { "" };
                format!("{}{sp}{op}{sp}{}", grammar(rng, depth - 1), grammar(rng, depth - 1))
            }
        }
    };
    if rng.gen_bool(0.15) {
        out = format!("{out}^{}", rng.gen_range(0..4));
    }
    out
}

/// Grammar-generated expressions, about half of them corrupted by random
/// character edits.
pub fn random_expression<R: Rng>(rng: &mut R) -> String {
    let mut chars: Vec<char> = grammar(rng, 4).chars().collect();
    if rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..3) {
            let at = rng.gen_range(0..=chars.len());
            let c = NOISE[rng.gen_range(0..NOISE.len())];
            match rng.gen_range(0..3) {
                0 => chars.insert(at, c),
                1 if at < chars.len() => {
                    chars.remove(at);
                }
                _ if at < chars.len() => chars[at] = c,
                _ => chars.push(c),
            }
        }
    }
    chars.into_iter().collect()
}

//! Small arithmetic language for prescribing curvature and torsion as
//! functions of the arc-length parameter `s`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := number | 's' | func '(' expr ')' | '(' expr ')' | factor '^' integer
//! func   := sin | cos | sinh | cosh | exp
//! ```
//!
//! There is no unary minus; write `0 - x`. Numbers are decimal with an
//! optional exponent (`1.5e-3`); exponents after `^` are non-negative integers.

use std::fmt;

use thiserror::Error;

use crate::jet::Jet;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Exp,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "exp" => Func::Exp,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Exp => "exp",
        }
    }

    fn apply(self, x: f64) -> f64 {
        match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Sinh => x.sinh(),
            Func::Cosh => x.cosh(),
            Func::Exp => x.exp(),
        }
    }

    fn apply_jet(self, x: Jet) -> Jet {
        match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Sinh => x.sinh(),
            Func::Cosh => x.cosh(),
            Func::Exp => x.exp(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, s: f64) -> Result<f64, ExprError> {
        Ok(match self {
            Expr::Num(v) => *v,
            Expr::Var => s,
            Expr::Add(a, b) => a.eval(s)? + b.eval(s)?,
            Expr::Sub(a, b) => a.eval(s)? - b.eval(s)?,
            Expr::Mul(a, b) => a.eval(s)? * b.eval(s)?,
            Expr::Div(a, b) => {
                let num = a.eval(s)?;
                let den = b.eval(s)?;
                if den == 0.0 {
                    return Err(ExprError::DivisionByZero);
                }
                num / den
            }
            Expr::Pow(a, n) => a.eval(s)?.powi(*n as i32),
            Expr::Call(f, a) => f.apply(a.eval(s)?),
        })
    }

    /// Evaluates on a jet, giving the Taylor expansion of the expression.
    pub fn eval_jet(&self, s: Jet) -> Result<Jet, ExprError> {
        Ok(match self {
            Expr::Num(v) => Jet::constant(*v),
            Expr::Var => s,
            Expr::Add(a, b) => a.eval_jet(s)? + b.eval_jet(s)?,
            Expr::Sub(a, b) => a.eval_jet(s)? - b.eval_jet(s)?,
            Expr::Mul(a, b) => a.eval_jet(s)? * b.eval_jet(s)?,
            Expr::Div(a, b) => {
                let num = a.eval_jet(s)?;
                let den = b.eval_jet(s)?;
                if den.value() == 0.0 {
                    return Err(ExprError::DivisionByZero);
                }
                num / den
            }
            Expr::Pow(a, n) => a.eval_jet(s)?.powi(*n),
            Expr::Call(f, a) => f.apply_jet(a.eval_jet(s)?),
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
            if paren {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Var => f.write_str("s"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let op = if matches!(self, Expr::Add(..)) { "+" } else { "-" };
                wrap(f, a, a.precedence() < 1)?;
                write!(f, " {op} ")?;
                wrap(f, b, b.precedence() <= 1)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                let op = if matches!(self, Expr::Mul(..)) { "*" } else { "/" };
                wrap(f, a, a.precedence() < 2)?;
                write!(f, " {op} ")?;
                wrap(f, b, b.precedence() <= 2)
            }
            Expr::Pow(a, n) => {
                wrap(f, a, a.precedence() < 3)?;
                write!(f, "^{n}")
            }
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64, String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.pos - start
    }

    /// Next token and its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize), ExprError> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            self.pos += 1;
            return Ok((t, start));
        }
        if c.is_ascii_digit() || c == b'.' {
            let int_len = self.digits();
            let mut frac_len = 0;
            if self.src.get(self.pos) == Some(&b'.') {
                self.pos += 1;
                frac_len = self.digits();
            }
            if int_len == 0 && frac_len == 0 {
                return Err(syntax(start, "malformed number"));
            }
            if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
                let save = self.pos;
                self.pos += 1;
                if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                    self.pos += 1;
                }
                if self.digits() == 0 {
                    self.pos = save;
                }
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            let v: f64 = text.parse().map_err(|_| syntax(start, "malformed number"))?;
            if !v.is_finite() {
                return Err(syntax(start, "number out of range"));
            }
            return Ok((Tok::Num(v, text.to_string()), start));
        }
        if c.is_ascii_alphabetic() {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            return Ok((Tok::Ident(text.to_string()), start));
        }
        Err(syntax(start, "unexpected character"))
    }
}

fn syntax(offset: usize, message: &str) -> ExprError {
    ExprError::SyntaxError { offset, message: message.to_string() }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<(), ExprError> {
        let (t, at) = self.lexer.next()?;
        self.tok = t;
        self.at = at;
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            match self.tok {
                Tok::Star => {
                    self.bump()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let mut base = self.atom()?;
        while self.tok == Tok::Caret {
            self.bump()?;
            let n = match &self.tok {
                Tok::Num(_, text) if text.bytes().all(|b| b.is_ascii_digit()) => text
                    .parse::<u32>()
                    .map_err(|_| syntax(self.at, "exponent out of range"))?,
                _ => return Err(syntax(self.at, "expected integer exponent")),
            };
            self.bump()?;
            base = Expr::Pow(Box::new(base), n);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Num(v, _) => {
                self.bump()?;
                Ok(Expr::Num(v))
            }
            Tok::Ident(name) => {
                if name == "s" {
                    self.bump()?;
                    return Ok(Expr::Var);
                }
                let Some(func) = Func::from_name(&name) else {
                    return Err(syntax(self.at, "unknown identifier"));
                };
                self.bump()?;
                if self.tok != Tok::LParen {
                    return Err(syntax(self.at, "expected '(' after function name"));
                }
                self.bump()?;
                let arg = self.expr()?;
                self.expect_rparen()?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Tok::End => Err(syntax(self.at, "unexpected end of input")),
            _ => Err(syntax(self.at, "expected number, 's', function or '('")),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ExprError> {
        if self.tok != Tok::RParen {
            return Err(syntax(self.at, "expected ')'"));
        }
        self.bump()
    }
}

/// Parses `text`; errors carry the byte offset of the offending token.
pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { lexer: Lexer { src: text.as_bytes(), pos: 0 }, tok: Tok::End, at: 0 };
    p.bump()?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return Err(syntax(p.at, "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn constants_and_functions() {
        assert_eq!(parse_expr("2").unwrap(), Expr::Num(2.0));
        let e = parse_expr("1 + 0.1*sin(s)").unwrap();
        assert_relative_eq!(e.eval(std::f64::consts::FRAC_PI_2).unwrap(), 1.1, epsilon = 1e-15);
    }

    #[test]
    fn syntax_error_offsets() {
        assert_eq!(
            parse_expr("cosh(s^2"),
            Err(ExprError::SyntaxError { offset: 8, message: "expected ')'".into() })
        );
        assert!(matches!(parse_expr("1 +* 2"), Err(ExprError::SyntaxError { offset: 3, .. })));
        assert!(matches!(parse_expr("tan(s)"), Err(ExprError::SyntaxError { offset: 0, .. })));
        assert!(matches!(parse_expr("-1"), Err(ExprError::SyntaxError { offset: 0, .. })));
        assert!(matches!(parse_expr("s^2.5"), Err(ExprError::SyntaxError { offset: 2, .. })));
        assert!(matches!(parse_expr("s s"), Err(ExprError::SyntaxError { offset: 2, .. })));
        assert!(matches!(parse_expr(""), Err(ExprError::SyntaxError { offset: 0, .. })));
    }

    #[test]
    fn associativity_and_precedence() {
        let e = parse_expr("8 - 4 - 2").unwrap();
        assert_eq!(e.eval(0.0).unwrap(), 2.0);
        let e = parse_expr("8 / 4 / 2").unwrap();
        assert_eq!(e.eval(0.0).unwrap(), 1.0);
        let e = parse_expr("2 + 3 * s^2^2").unwrap();
        assert_eq!(e.eval(2.0).unwrap(), 2.0 + 3.0 * 16.0);
        let e = parse_expr("1e-3 * 2.5E+2").unwrap();
        assert_relative_eq!(e.eval(0.0).unwrap(), 0.25);
    }

    #[test]
    fn division_by_zero_is_reported() {
        let e = parse_expr("1 / (s - 1)").unwrap();
        assert_eq!(e.eval(1.0), Err(ExprError::DivisionByZero));
        assert!(e.eval(2.0).is_ok());
        assert_eq!(e.eval_jet(Jet::variable(1.0)), Err(ExprError::DivisionByZero));
    }

    #[test]
    fn jet_evaluation_gives_derivatives() {
        let e = parse_expr("1 + 0.1*sin(s)").unwrap();
        let j = e.eval_jet(Jet::variable(0.3)).unwrap();
        assert_relative_eq!(j.value(), 1.0 + 0.1 * 0.3f64.sin(), epsilon = 1e-15);
        assert_relative_eq!(j.derivative(1), 0.1 * 0.3f64.cos(), epsilon = 1e-15);
        assert_relative_eq!(j.derivative(2), -0.1 * 0.3f64.sin(), epsilon = 1e-15);
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0.0..1e3f64).prop_map(Expr::Num),
            Just(Expr::Var),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner.clone(), 0u32..5).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
                (inner, prop_oneof![
                    Just(Func::Sin), Just(Func::Cos), Just(Func::Sinh), Just(Func::Cosh), Just(Func::Exp)
                ]).prop_map(|(a, f)| Expr::Call(f, Box::new(a))),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(e in arb_expr()) {
            let text = e.to_string();
            prop_assert_eq!(parse_expr(&text).unwrap(), e);
            // whitespace is insignificant
            let squeezed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(parse_expr(&squeezed).unwrap(), parse_expr(&text).unwrap());
        }
    }
}

//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | 'i' | var | '(' expr ')' | '-' base
//! var      := ('z'|'zbar'|'x') nat
//! rational := nat ('/' nat)?
//! ```
//!
//! Whitespace between tokens is ignored. There is no implicit multiplication
//! and no division between expressions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational};
use crate::poly::{Poly, RealPoly, WPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `z k` and `zbar k` variables.
    Complex,
    /// `x k` variables.
    Real,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Z,
    ZBar,
    X,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Rational(Rational),
    ImaginaryUnit,
    Var(VarKind, usize),
    Neg(Box<ExprAst>),
    Sum(Box<ExprAst>, Box<ExprAst>),
    Difference(Box<ExprAst>, Box<ExprAst>),
    Product(Box<ExprAst>, Box<ExprAst>),
    Power(Box<ExprAst>, u32),
    Paren(Box<ExprAst>),
}

impl ExprAst {
    /// Largest variable index appearing, 0 for constants.
    pub fn max_index(&self) -> usize {
        match self {
            ExprAst::Rational(_) | ExprAst::ImaginaryUnit => 0,
            ExprAst::Var(_, k) => *k,
            ExprAst::Neg(a) | ExprAst::Power(a, _) | ExprAst::Paren(a) => a.max_index(),
            ExprAst::Sum(a, b) | ExprAst::Difference(a, b) | ExprAst::Product(a, b) => {
                a.max_index().max(b.max_index())
            }
        }
    }

    fn to_poly(&self, nvars: usize, slot: &dyn Fn(VarKind, usize) -> usize) -> Poly {
        match self {
            ExprAst::Rational(r) => Poly::constant(nvars, GaussianRational::real(r.clone())),
            ExprAst::ImaginaryUnit => Poly::constant(nvars, GaussianRational::i()),
            ExprAst::Var(kind, k) => Poly::var(nvars, slot(*kind, *k)),
            ExprAst::Neg(a) => -a.to_poly(nvars, slot),
            ExprAst::Paren(a) => a.to_poly(nvars, slot),
            ExprAst::Sum(a, b) => a.to_poly(nvars, slot) + b.to_poly(nvars, slot),
            ExprAst::Difference(a, b) => a.to_poly(nvars, slot) - b.to_poly(nvars, slot),
            ExprAst::Product(a, b) => a.to_poly(nvars, slot) * b.to_poly(nvars, slot),
            ExprAst::Power(a, e) => a.to_poly(nvars, slot).pow(*e),
        }
    }

    pub fn to_wpoly(&self, m: usize) -> Result<WPoly> {
        let k = self.max_index();
        if k > m {
            return Err(Error::IndexOutOfRange { index: k, max: m });
        }
        let p = self.to_poly(2 * m, &|kind, k| match kind {
            VarKind::ZBar => m + k - 1,
            _ => k - 1,
        });
        Ok(WPoly::from_poly(m, p))
    }

    pub fn to_real_poly(&self, d: usize) -> Result<RealPoly> {
        let k = self.max_index();
        if k > d {
            return Err(Error::IndexOutOfRange { index: k, max: d });
        }
        Ok(RealPoly::from_poly(d, self.to_poly(d, &|_, k| k - 1)))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, at: usize, expected: &[&str]) -> Result<T> {
        Err(Error::SyntaxError {
            offset: at,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn nat(&mut self) -> Result<(BigInt, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(start, &["natural number"]);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok((text.parse().expect("ascii digits"), start))
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = ExprAst::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = ExprAst::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = ExprAst::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let (n, at) = self.nat()?;
            let e = u32::try_from(n).or_else(|_| self.fail(at, &["exponent below 2^32"]))?;
            return Ok(ExprAst::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn var_index(&mut self) -> Result<usize> {
        let (n, at) = self.nat()?;
        if n.is_zero() {
            return Err(Error::IndexError { offset: at });
        }
        usize::try_from(n).or_else(|_| self.fail(at, &["variable index"]))
    }

    fn base(&mut self) -> Result<ExprAst> {
        let var_expect: &[&str] = match self.mode {
            Mode::Complex => &["rational", "'i'", "'z'", "'zbar'", "'('", "'-'"],
            Mode::Real => &["rational", "'i'", "'x'", "'('", "'-'"],
        };
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(ExprAst::Neg(Box::new(self.base()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    let p = self.pos;
                    return self.fail(p, &["')'", "'+'", "'-'", "'*'"]);
                }
                self.pos += 1;
                Ok(ExprAst::Paren(Box::new(inner)))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(ExprAst::ImaginaryUnit)
            }
            Some(b'z') if self.mode == Mode::Complex => {
                self.pos += 1;
                if self.src[self.pos..].starts_with(b"bar") {
                    self.pos += 3;
                    Ok(ExprAst::Var(VarKind::ZBar, self.var_index()?))
                } else {
                    Ok(ExprAst::Var(VarKind::Z, self.var_index()?))
                }
            }
            Some(b'x') if self.mode == Mode::Real => {
                self.pos += 1;
                Ok(ExprAst::Var(VarKind::X, self.var_index()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let (n, _) = self.nat()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let (d, dat) = self.nat()?;
                    if d.is_zero() {
                        return self.fail(dat, &["nonzero denominator"]);
                    }
                    return Ok(ExprAst::Rational(Rational::new(n, d)));
                }
                Ok(ExprAst::Rational(Rational::from_integer(n)))
            }
            _ => self.fail(at, var_expect),
        }
    }
}

/// Parses a full expression; trailing input is a syntax error.
pub fn parse_expr(s: &str, mode: Mode) -> Result<ExprAst> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        mode,
    };
    let ast = p.expr()?;
    if p.peek().is_some() {
        let at = p.pos;
        return p.fail(at, &["'+'", "'-'", "'*'", "'^'", "end of input"]);
    }
    Ok(ast)
}

pub fn parse_wpoly(s: &str, m: usize) -> Result<WPoly> {
    parse_expr(s, Mode::Complex)?.to_wpoly(m)
}

pub fn parse_real_poly(s: &str, d: usize) -> Result<RealPoly> {
    parse_expr(s, Mode::Real)?.to_real_poly(d)
}

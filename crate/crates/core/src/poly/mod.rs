//! Polynomials in `z_1..z_m, zbar_1..zbar_m` (Wirtinger calculus) and real-mode
//! polynomials in `x_1..x_d`, both over Gaussian rationals.
//!
//! `z` and `zbar` are independent commuting symbols. A polynomial is
//! real-valued exactly when it is fixed by [`WPoly::conj_poly`].

mod sparse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub use sparse::{Monomial, Poly};

use crate::error::{Error, Result};
use crate::exact::{CMatrix, GaussianRational, HermitianMatrix, Rational};

/// A point of C^m given by exact coordinates `z_1..z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointC {
    pub coords: Vec<GaussianRational>,
}

impl PointC {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        Self { coords }
    }

    pub fn origin(m: usize) -> Self {
        Self::new(vec![GaussianRational::zero(); m])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| GaussianRational::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Interleaved real coordinates `(x_1, y_1, .., x_m, y_m)`.
    pub fn real_coords(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .flat_map(|z| [z.re.clone(), z.im.clone()])
            .collect()
    }
}

/// Polynomial in `z_1..z_m` and `zbar_1..zbar_m`.
///
/// Variable slot `μ-1` holds `z_μ`, slot `m+μ-1` holds `zbar_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WPoly {
    m: usize,
    poly: Poly,
}

impl WPoly {
    pub fn from_poly(m: usize, poly: Poly) -> Self {
        assert_eq!(poly.nvars(), 2 * m);
        Self { m, poly }
    }

    pub fn zero(m: usize) -> Self {
        Self::from_poly(m, Poly::zero(2 * m))
    }

    pub fn constant(m: usize, c: GaussianRational) -> Self {
        Self::from_poly(m, Poly::constant(2 * m, c))
    }

    /// `z_k` with 1-based `k`.
    pub fn z(m: usize, k: usize) -> Self {
        Self::from_poly(m, Poly::var(2 * m, k - 1))
    }

    /// `zbar_k` with 1-based `k`.
    pub fn zbar(m: usize, k: usize) -> Self {
        Self::from_poly(m, Poly::var(2 * m, m + k - 1))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_poly(self.m, self.poly.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::from_poly(self.m, self.poly.pow(e))
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.m {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.m,
            });
        }
        Ok(())
    }

    /// ∂/∂z_μ, 1-based.
    pub fn wirtinger_d(&self, mu: usize) -> Result<Self> {
        self.check_index(mu)?;
        Ok(Self::from_poly(self.m, self.poly.derivative(mu - 1)))
    }

    /// ∂/∂zbar_ν, 1-based.
    pub fn wirtinger_dbar(&self, nu: usize) -> Result<Self> {
        self.check_index(nu)?;
        Ok(Self::from_poly(self.m, self.poly.derivative(self.m + nu - 1)))
    }

    /// Derivative along real direction `dir` of `(x_1, y_1, .., x_m, y_m)` (0-based).
    ///
    /// ∂/∂x = ∂ + ∂̄ and ∂/∂y = i(∂ − ∂̄).
    pub fn real_partial(&self, dir: usize) -> Self {
        let mu = dir / 2;
        let d = self.poly.derivative(mu);
        let db = self.poly.derivative(self.m + mu);
        let p = if dir % 2 == 0 {
            &d + &db
        } else {
            (&d - &db).scale(&GaussianRational::i())
        };
        Self::from_poly(self.m, p)
    }

    /// Conjugates coefficients and swaps `z` with `zbar`.
    pub fn conj_poly(&self) -> Self {
        let m = self.m;
        let swapped = Poly::from_terms(
            2 * m,
            self.poly.terms().map(|(mono, c)| {
                let mut e = mono.0[m..].to_vec();
                e.extend_from_slice(&mono.0[..m]);
                (Monomial(e), c.conj())
            }),
        );
        Self::from_poly(m, swapped)
    }

    pub fn is_real_valued(&self) -> bool {
        self.conj_poly() == *self
    }

    /// True when no `zbar` appears.
    pub fn is_holomorphic(&self) -> bool {
        self.poly
            .terms()
            .all(|(mono, _)| mono.0[self.m..].iter().all(|&e| e == 0))
    }

    /// Substitutes `z ← x`, `zbar ← conj(x)`.
    pub fn eval(&self, x: &PointC) -> Result<GaussianRational> {
        if x.dim() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "point of dimension {} for polynomial in C^{}",
                x.dim(),
                self.m
            )));
        }
        let mut vals = x.coords.clone();
        vals.extend(x.coords.iter().map(GaussianRational::conj));
        Ok(self.poly.eval(&vals))
    }

    /// Matrix `H[μ][ν] = ∂²ρ/∂z_μ∂zbar_ν` at `x`.
    pub fn complex_hessian(&self, x: &PointC) -> Result<HermitianMatrix> {
        if !self.is_real_valued() {
            return Err(Error::NotRealValued(self.to_string()));
        }
        let m = self.m;
        let mut h = CMatrix::zeros(m, m);
        for mu in 1..=m {
            let d = self.wirtinger_d(mu)?;
            for nu in 1..=m {
                h[(mu - 1, nu - 1)] = d.wirtinger_dbar(nu)?.eval(x)?;
            }
        }
        HermitianMatrix::new(h)
    }

    /// Composition `ρ(Φ(z))` where `phi[μ]` gives the new `z_μ` and its conjugate
    /// polynomial gives the new `zbar_μ`.
    pub fn compose_holomorphic(&self, phi: &[WPoly]) -> Self {
        assert_eq!(phi.len(), self.m);
        let m_out = phi.first().map_or(self.m, WPoly::m);
        let mut subs: Vec<Poly> = phi.iter().map(|p| p.poly.clone()).collect();
        subs.extend(phi.iter().map(|p| p.conj_poly().poly));
        Self::from_poly(m_out, self.poly.compose(&subs))
    }

    /// Rewrites in interleaved real coordinates with `z_μ = x_{2μ-1} + i x_{2μ}`.
    pub fn to_real_coordinates(&self) -> RealPoly {
        let d = 2 * self.m;
        let i = GaussianRational::i();
        let mut subs = Vec::with_capacity(d);
        for mu in 0..self.m {
            let x = Poly::var(d, 2 * mu);
            let y = Poly::var(d, 2 * mu + 1).scale(&i);
            subs.push(&x + &y);
        }
        for mu in 0..self.m {
            let x = Poly::var(d, 2 * mu);
            let y = Poly::var(d, 2 * mu + 1).scale(&i);
            subs.push(&x - &y);
        }
        RealPoly::from_poly(d, self.poly.compose(&subs))
    }
}

/// Polynomial in real coordinates `x_1..x_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealPoly {
    d: usize,
    poly: Poly,
}

impl RealPoly {
    pub fn from_poly(d: usize, poly: Poly) -> Self {
        assert_eq!(poly.nvars(), d);
        Self { d, poly }
    }

    pub fn zero(d: usize) -> Self {
        Self::from_poly(d, Poly::zero(d))
    }

    pub fn one(d: usize) -> Self {
        Self::from_poly(d, Poly::one(d))
    }

    pub fn constant(d: usize, c: GaussianRational) -> Self {
        Self::from_poly(d, Poly::constant(d, c))
    }

    /// `x_k` with 1-based `k`.
    pub fn x(d: usize, k: usize) -> Self {
        Self::from_poly(d, Poly::var(d, k - 1))
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_poly(self.d, self.poly.scale(c))
    }

    /// ∂/∂x_k with 0-based `k`.
    pub fn partial(&self, k: usize) -> Self {
        Self::from_poly(self.d, self.poly.derivative(k))
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.poly.terms().all(|(_, c)| c.is_real())
    }

    pub fn eval(&self, x: &[Rational]) -> Result<GaussianRational> {
        if x.len() != self.d {
            return Err(Error::DimensionMismatch(format!(
                "point of dimension {} for polynomial in {} variables",
                x.len(),
                self.d
            )));
        }
        let vals: Vec<GaussianRational> = x.iter().cloned().map(GaussianRational::real).collect();
        Ok(self.poly.eval(&vals))
    }

    pub fn compose(&self, subs: &[RealPoly]) -> Self {
        let d = subs.first().map_or(self.d, RealPoly::dim);
        let polys: Vec<Poly> = subs.iter().map(|p| p.poly.clone()).collect();
        Self::from_poly(d, self.poly.compose(&polys))
    }

    /// Real Hessian `∂²r/∂x_a∂x_b` at `x`.
    pub fn hessian(&self, x: &[Rational]) -> Result<CMatrix> {
        let mut h = CMatrix::zeros(self.d, self.d);
        for a in 0..self.d {
            let pa = self.partial(a);
            for b in 0..self.d {
                h[(a, b)] = pa.partial(b).eval(x)?;
            }
        }
        Ok(h)
    }
}

macro_rules! wrapper_ops {
    ($ty:ident, $field:ident, $dim:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty::from_poly(self.$dim, &self.$field + &rhs.$field)
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty::from_poly(self.$dim, &self.$field - &rhs.$field)
            }
        }
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                $ty::from_poly(self.$dim, &self.$field * &rhs.$field)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty::from_poly(self.$dim, -&self.$field)
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

wrapper_ops!(WPoly, poly, m);
wrapper_ops!(RealPoly, poly, d);

fn fmt_magnitude(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("({r})")
    }
}

/// Prints terms in descending graded-lex order with `*` products and `^` powers.
///
/// The output parses back to the same polynomial under the expression grammar.
pub fn format_poly(p: &Poly, name: impl Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, c)) in p.terms().rev().enumerate() {
        let (neg, mag, unit) = if c.im.is_zero() {
            (c.re.is_negative(), fmt_magnitude(&c.re.abs()), c.re.abs().is_one())
        } else if c.re.is_zero() {
            let a = c.im.abs();
            let mag = if a.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", fmt_magnitude(&a))
            };
            (c.im.is_negative(), mag, false)
        } else {
            (false, format!("({c})"), false)
        };
        let factors: Vec<String> = mono
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    name(v)
                } else {
                    format!("{}^{}", name(v), e)
                }
            })
            .collect();
        let first_has_power = mono.0.iter().find(|&&e| e > 0).is_some_and(|&e| e > 1);
        let body = if factors.is_empty() {
            mag
        } else if unit {
            // A bare leading "-" would bind to the first base before `^`.
            if idx == 0 && neg && first_has_power {
                format!("1*{}", factors.join("*"))
            } else {
                factors.join("*")
            }
        } else {
            format!("{}*{}", mag, factors.join("*"))
        };
        match (idx, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push('+'),
            (_, true) => out.push('-'),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m;
        f.write_str(&format_poly(&self.poly, |v| {
            if v < m {
                format!("z{}", v + 1)
            } else {
                format!("zbar{}", v - m + 1)
            }
        }))
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.poly, |v| format!("x{}", v + 1)))
    }
}

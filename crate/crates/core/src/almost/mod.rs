//! Almost complex and almost CR structures with polynomial coefficients on
//! open sets of R^d, and their integrability conditions.
//!
//! Matrices act on column vectors: `(JX)_r = Σ_c J[r][c] X_c`. For a frame
//! `X_1..X_{2n}` of `HM`, column `i` of `Jmat` gives `J X_i = Σ_r Jmat[r][i] X_r`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{CMatrix, GaussianRational, Rational};
use crate::poly::{RealPoly, WPoly};

/// Vector field `Σ components[c] ∂/∂x_{c+1}` on R^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVectorField {
    pub components: Vec<RealPoly>,
}

impl PolyVectorField {
    pub fn new(components: Vec<RealPoly>) -> Result<Self> {
        let d = components.len();
        if components.iter().any(|c| c.dim() != d) {
            return Err(Error::DimensionMismatch(
                "vector field components must be polynomials in d variables".into(),
            ));
        }
        Ok(Self { components })
    }

    pub fn zero(d: usize) -> Self {
        Self {
            components: vec![RealPoly::zero(d); d],
        }
    }

    /// `∂/∂x_k`, 1-based.
    pub fn coordinate(d: usize, k: usize) -> Self {
        let mut v = Self::zero(d);
        v.components[k - 1] = RealPoly::one(d);
        v
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RealPoly::is_zero)
    }

    /// `X(f) = Σ X_c ∂f/∂x_c`.
    pub fn apply(&self, f: &RealPoly) -> RealPoly {
        let mut acc = RealPoly::zero(self.dim());
        for (c, xc) in self.components.iter().enumerate() {
            if !xc.is_zero() {
                acc = &acc + &(xc * &f.partial(c));
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, f: &RealPoly) -> Self {
        Self {
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Vec<GaussianRational>> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector fields on R^{} and R^{}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

/// `[X, Y]_c = X(Y_c) − Y(X_c)`.
pub fn lie_bracket(x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField> {
    x.check(y)?;
    Ok(PolyVectorField {
        components: x
            .components
            .iter()
            .zip(&y.components)
            .map(|(xc, yc)| &x.apply(yc) - &y.apply(xc))
            .collect(),
    })
}

/// `Σ_c f_c V_c` for polynomial coefficients `f_c`.
fn combination(coeffs: &[RealPoly], fields: &[PolyVectorField], d: usize) -> PolyVectorField {
    let mut acc = PolyVectorField::zero(d);
    for (f, v) in coeffs.iter().zip(fields) {
        if !f.is_zero() {
            acc = acc.add(&v.scale(f));
        }
    }
    acc
}

type PolyMatrix = Vec<Vec<RealPoly>>;

fn poly_mat_mul(a: &PolyMatrix, b: &PolyMatrix, d: usize) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    let mut acc = RealPoly::zero(d);
                    for k in 0..inner {
                        acc = &acc + &(&row[k] * &b[k][c]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn is_minus_identity(m: &PolyMatrix, d: usize) -> bool {
    let minus_one = RealPoly::constant(d, GaussianRational::int(-1));
    m.iter().enumerate().all(|(r, row)| {
        row.iter().enumerate().all(|(c, e)| {
            if r == c {
                *e == minus_one
            } else {
                e.is_zero()
            }
        })
    })
}

fn check_real(polys: &PolyMatrix, what: &str) -> Result<()> {
    if polys.iter().flatten().all(RealPoly::has_real_coefficients) {
        Ok(())
    } else {
        Err(Error::InvalidFrame(format!("{what} has non-real coefficients")))
    }
}

/// Almost complex structure on an open set of R^{2n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplex {
    j: PolyMatrix,
}

impl AlmostComplex {
    pub fn new(j: PolyMatrix) -> Result<Self> {
        let d = j.len();
        if d % 2 != 0 || j.iter().any(|row| row.len() != d || row.iter().any(|e| e.dim() != d)) {
            return Err(Error::DimensionMismatch("J must be a square matrix of even size over R^d".into()));
        }
        check_real(&j, "J")?;
        if !is_minus_identity(&poly_mat_mul(&j, &j, d), d) {
            return Err(Error::InvalidFrame("J² is not −Id".into()));
        }
        Ok(Self { j })
    }

    /// Standard structure on R^{2n} with interleaved `(x_1, y_1, ..)`: `∂x ↦ ∂y`.
    pub fn standard(n: usize) -> Self {
        let d = 2 * n;
        let mut j = vec![vec![RealPoly::zero(d); d]; d];
        for k in 0..n {
            j[2 * k + 1][2 * k] = RealPoly::one(d);
            j[2 * k][2 * k + 1] = RealPoly::constant(d, GaussianRational::int(-1));
        }
        Self { j }
    }

    pub fn dim(&self) -> usize {
        self.j.len()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.j
    }

    pub fn apply(&self, x: &PolyVectorField) -> Result<PolyVectorField> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector field on R^{} for structure on R^{}",
                x.dim(),
                self.dim()
            )));
        }
        Ok(PolyVectorField {
            components: self
                .j
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&x.components)
                        .fold(RealPoly::zero(x.dim()), |acc, (a, b)| &acc + &(a * b))
                })
                .collect(),
        })
    }

    /// `N(X,Y) = [X,Y] − [JX,JY] + J[X,JY] + J[JX,Y]`.
    pub fn nijenhuis(&self, x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField> {
        let jx = self.apply(x)?;
        let jy = self.apply(y)?;
        let inner = lie_bracket(x, &jy)?.add(&lie_bracket(&jx, y)?);
        Ok(lie_bracket(x, y)?
            .sub(&lie_bracket(&jx, &jy)?)
            .add(&self.apply(&inner)?))
    }

    /// Vanishing of `N(∂_i, ∂_j)` for all `i < j`; enough since `N` is a tensor.
    pub fn is_integrable(&self) -> bool {
        let d = self.dim();
        (1..=d).all(|i| {
            (i + 1..=d).all(|j| {
                self.nijenhuis(&PolyVectorField::coordinate(d, i), &PolyVectorField::coordinate(d, j))
                    .map(|n| n.is_zero())
                    .unwrap_or(false)
            })
        })
    }
}

/// Almost CR structure given by a frame of `HM`, annihilating forms and `J` on the frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostCRFrame {
    d: usize,
    frame: Vec<PolyVectorField>,
    theta: PolyMatrix,
    jmat: PolyMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialIntegrability {
    pub cr2: bool,
    pub cr3: bool,
}

impl AlmostCRFrame {
    /// Validates `θ_a(X_i) ≡ 0`, `Jmat² = −Id`, and independence at `base`.
    pub fn new(
        frame: Vec<PolyVectorField>,
        theta: PolyMatrix,
        jmat: PolyMatrix,
        base: &[Rational],
    ) -> Result<Self> {
        let d = base.len();
        let two_n = frame.len();
        if two_n % 2 != 0 {
            return Err(Error::InvalidFrame("frame must have an even number of fields".into()));
        }
        if frame.iter().any(|v| v.dim() != d) || theta.iter().any(|t| t.len() != d || t.iter().any(|p| p.dim() != d)) {
            return Err(Error::InvalidFrame(format!("frame and forms must live on R^{d}")));
        }
        if two_n + theta.len() != d {
            return Err(Error::InvalidFrame(format!(
                "{two_n} frame fields and {} forms do not add up to dimension {d}",
                theta.len()
            )));
        }
        if jmat.len() != two_n || jmat.iter().any(|row| row.len() != two_n || row.iter().any(|p| p.dim() != d)) {
            return Err(Error::InvalidFrame(format!("Jmat must be {two_n}x{two_n}")));
        }
        check_real(&jmat, "Jmat")?;
        check_real(&theta, "theta")?;
        for v in &frame {
            check_real(&vec![v.components.clone()], "frame")?;
        }
        if !is_minus_identity(&poly_mat_mul(&jmat, &jmat, d), d) {
            return Err(Error::InvalidFrame("Jmat² is not −Id".into()));
        }
        for (a, t) in theta.iter().enumerate() {
            for (i, v) in frame.iter().enumerate() {
                if !pair(t, v, d).is_zero() {
                    return Err(Error::InvalidFrame(format!("theta_{} does not annihilate X_{}", a + 1, i + 1)));
                }
            }
        }
        let at = |vs: Vec<Vec<RealPoly>>| -> Result<CMatrix> {
            CMatrix::from_rows(
                vs.iter()
                    .map(|row| row.iter().map(|p| p.eval(base)).collect::<Result<_>>())
                    .collect::<Result<_>>()?,
            )
        };
        if at(frame.iter().map(|v| v.components.clone()).collect())?.rank() != two_n {
            return Err(Error::InvalidFrame("frame is dependent at the base point".into()));
        }
        if at(theta.clone())?.rank() != theta.len() {
            return Err(Error::InvalidFrame("forms are dependent at the base point".into()));
        }
        Ok(Self { d, frame, theta, jmat })
    }

    /// Frame of the rigid hypersurface `Im w = f(z, zbar)` in C^{n+1}, on the
    /// parameter space R^{2n+1} with coordinates `(x_1, y_1, .., x_n, y_n, u)`, `u = Re w`:
    /// `X_j = ∂x_j − 2 Im(f_{z_j}) ∂u`, `JX_j = ∂y_j − 2 Re(f_{z_j}) ∂u`, and
    /// `θ = du + Σ 2 Im(f_{z_j}) dx_j + 2 Re(f_{z_j}) dy_j`.
    pub fn from_rigid_hypersurface(f: &WPoly) -> Result<Self> {
        if !f.is_real_valued() {
            return Err(Error::NotRealValued(f.to_string()));
        }
        let n = f.m();
        let d = 2 * n + 1;
        let embed: Vec<RealPoly> = (1..=2 * n).map(|k| RealPoly::x(d, k)).collect();
        let half = GaussianRational::frac(1, 2);
        let neg_half_i = GaussianRational::new(Rational::zero(), -Rational::new(1.into(), 2.into()));
        let mut frame = Vec::with_capacity(2 * n);
        let mut theta = vec![RealPoly::zero(d); d];
        theta[d - 1] = RealPoly::one(d);
        for j in 1..=n {
            let fz = f.wirtinger_d(j)?;
            let fzb = fz.conj_poly();
            let sum = (&fz + &fzb).to_real_coordinates().compose(&embed);
            let diff = (&fz - &fzb).to_real_coordinates().compose(&embed);
            let re = sum.scale(&half);
            let im = diff.scale(&neg_half_i);
            let two = GaussianRational::int(2);
            let mut x = PolyVectorField::coordinate(d, 2 * j - 1);
            x.components[d - 1] = im.scale(&-two.clone());
            let mut y = PolyVectorField::coordinate(d, 2 * j);
            y.components[d - 1] = re.scale(&-two.clone());
            theta[2 * j - 2] = im.scale(&two);
            theta[2 * j - 1] = re.scale(&two);
            frame.push(x);
            frame.push(y);
        }
        let mut jmat = vec![vec![RealPoly::zero(d); 2 * n]; 2 * n];
        for k in 0..n {
            jmat[2 * k + 1][2 * k] = RealPoly::one(d);
            jmat[2 * k][2 * k + 1] = RealPoly::constant(d, GaussianRational::int(-1));
        }
        Self::new(frame, vec![theta], jmat, &vec![Rational::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn frame(&self) -> &[PolyVectorField] {
        &self.frame
    }

    pub fn theta(&self) -> &PolyMatrix {
        &self.theta
    }

    pub fn jmat(&self) -> &PolyMatrix {
        &self.jmat
    }

    /// `J X_i` as a vector field.
    pub fn j_frame(&self, i: usize) -> PolyVectorField {
        let col: Vec<RealPoly> = self.jmat.iter().map(|row| row[i].clone()).collect();
        combination(&col, &self.frame, self.d)
    }

    /// Identities whose vanishing is (cr2): `[X_i,X_j] − [JX_i,JX_j]` paired with each θ_a.
    fn cr2_terms(&self) -> Result<Vec<RealPoly>> {
        let jf: Vec<PolyVectorField> = (0..self.frame.len()).map(|i| self.j_frame(i)).collect();
        let mut out = Vec::new();
        for i in 0..self.frame.len() {
            for j in i + 1..self.frame.len() {
                let v = lie_bracket(&self.frame[i], &self.frame[j])?.sub(&lie_bracket(&jf[i], &jf[j])?);
                out.extend(self.theta.iter().map(|t| pair(t, &v, self.d)));
            }
        }
        Ok(out)
    }

    /// Components of `det(G)·N(X_i, X_j)` where `G = FᵀF` is the Gram matrix of the
    /// frame and `J` is applied to `[X_i,JX_j] + [JX_i,X_j]` through `adj(G)Fᵀ`.
    fn cr3_terms(&self) -> Result<Vec<RealPoly>> {
        let d = self.d;
        let two_n = self.frame.len();
        let fcols: PolyMatrix = (0..d)
            .map(|r| self.frame.iter().map(|v| v.components[r].clone()).collect())
            .collect();
        let ft: PolyMatrix = self.frame.iter().map(|v| v.components.clone()).collect();
        let gram = poly_mat_mul(&ft, &fcols, d);
        let (det, adj) = det_and_adjugate(&gram, d);
        let solve = poly_mat_mul(&self.jmat, &poly_mat_mul(&adj, &ft, d), d);
        let jf: Vec<PolyVectorField> = (0..two_n).map(|i| self.j_frame(i)).collect();
        let mut out = Vec::new();
        for i in 0..two_n {
            for j in i + 1..two_n {
                let head = lie_bracket(&self.frame[i], &self.frame[j])?.sub(&lie_bracket(&jf[i], &jf[j])?);
                let inner = lie_bracket(&self.frame[i], &jf[j])?.add(&lie_bracket(&jf[i], &self.frame[j])?);
                let col: PolyMatrix = inner.components.iter().map(|c| vec![c.clone()]).collect();
                let coeffs: Vec<RealPoly> = poly_mat_mul(&solve, &col, d).into_iter().map(|r| r[0].clone()).collect();
                let j_inner = combination(&coeffs, &self.frame, d);
                out.extend(head.scale(&det).add(&j_inner).components);
            }
        }
        Ok(out)
    }

    /// Global polynomial-identity check of (cr2) and (cr3).
    pub fn partial_integrability(&self) -> Result<PartialIntegrability> {
        let cr2 = self.cr2_terms()?.iter().all(RealPoly::is_zero);
        let cr3 = cr2 && self.cr3_terms()?.iter().all(RealPoly::is_zero);
        Ok(PartialIntegrability { cr2, cr3 })
    }

    /// The same identities evaluated only at the given points.
    pub fn partial_integrability_at(&self, points: &[Vec<Rational>]) -> Result<PartialIntegrability> {
        let vanish = |terms: &[RealPoly]| -> Result<bool> {
            for p in points {
                for t in terms {
                    if !t.eval(p)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        };
        let cr2 = vanish(&self.cr2_terms()?)?;
        let cr3 = cr2 && vanish(&self.cr3_terms()?)?;
        Ok(PartialIntegrability { cr2, cr3 })
    }

    /// `Σ_a ξ_a θ_a([JX, X])` at `x`, where `X = Σ c_i X_i` with constant `c`.
    pub fn abstract_levi(&self, x: &[Rational], xi: &[Rational], c: &[Rational]) -> Result<Rational> {
        if x.len() != self.d || xi.len() != self.theta.len() || c.len() != self.frame.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected a point in R^{}, {} form coefficients and {} frame coefficients",
                self.d,
                self.theta.len(),
                self.frame.len()
            )));
        }
        let consts: Vec<RealPoly> = c
            .iter()
            .map(|v| RealPoly::constant(self.d, GaussianRational::real(v.clone())))
            .collect();
        let xf = combination(&consts, &self.frame, self.d);
        let jc: Vec<RealPoly> = self
            .jmat
            .iter()
            .map(|row| row.iter().zip(&consts).fold(RealPoly::zero(self.d), |acc, (a, b)| &acc + &(a * b)))
            .collect();
        let jx = combination(&jc, &self.frame, self.d);
        let br = lie_bracket(&jx, &xf)?;
        let mut total = Rational::zero();
        for (t, k) in self.theta.iter().zip(xi) {
            let v = pair(t, &br, self.d).eval(x)?;
            total += k * &v.re;
        }
        Ok(total)
    }
}

fn pair(form: &[RealPoly], v: &PolyVectorField, d: usize) -> RealPoly {
    form.iter()
        .zip(&v.components)
        .fold(RealPoly::zero(d), |acc, (a, b)| &acc + &(a * b))
}

/// Determinant and adjugate of a square polynomial matrix by cofactor expansion.
fn det_and_adjugate(m: &PolyMatrix, d: usize) -> (RealPoly, PolyMatrix) {
    let n = m.len();
    if n == 1 {
        return (m[0][0].clone(), vec![vec![RealPoly::one(d)]]);
    }
    let minor = |skip_r: usize, skip_c: usize| -> PolyMatrix {
        m.iter()
            .enumerate()
            .filter(|(r, _)| *r != skip_r)
            .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != skip_c).map(|(_, e)| e.clone()).collect())
            .collect()
    };
    let mut adj = vec![vec![RealPoly::zero(d); n]; n];
    for r in 0..n {
        for c in 0..n {
            let cof = determinant(&minor(r, c), d);
            adj[c][r] = if (r + c) % 2 == 0 { cof } else { -cof };
        }
    }
    let det = (0..n).fold(RealPoly::zero(d), |acc, c| &acc + &(&m[0][c] * &adj[c][0]));
    (det, adj)
}

fn determinant(m: &PolyMatrix, d: usize) -> RealPoly {
    let n = m.len();
    match n {
        0 => RealPoly::one(d),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = RealPoly::zero(d);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let sub: PolyMatrix = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, e)| e.clone()).collect())
                    .collect();
                let term = &m[0][c] * &determinant(&sub, d);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_real_poly;

    fn field(d: usize, comps: &[&str]) -> PolyVectorField {
        PolyVectorField::new(comps.iter().map(|s| parse_real_poly(s, d).unwrap()).collect()).unwrap()
    }

    #[test]
    fn brackets() {
        assert!(lie_bracket(&PolyVectorField::coordinate(2, 1), &PolyVectorField::coordinate(2, 2))
            .unwrap()
            .is_zero());
        let b = lie_bracket(&field(2, &["x2", "0"]), &PolyVectorField::coordinate(2, 2)).unwrap();
        assert_eq!(b, field(2, &["-1", "0"]));
        let x = field(3, &["1", "0", "2*x2"]);
        let y = field(3, &["0", "1", "-2*x1"]);
        assert_eq!(lie_bracket(&x, &y).unwrap(), field(3, &["0", "0", "-4"]));
    }

    #[test]
    fn adjugate_identity() {
        let d = 2;
        let p = |s: &str| parse_real_poly(s, d).unwrap();
        let m = vec![vec![p("1 + x1^2"), p("x2")], vec![p("x1*x2"), p("2")]];
        let (det, adj) = det_and_adjugate(&m, d);
        assert_eq!(det, p("2 + 2*x1^2 - x1*x2^2"));
        let prod = poly_mat_mul(&m, &adj, d);
        assert_eq!(prod, vec![vec![det.clone(), p("0")], vec![p("0"), det]]);
    }
}

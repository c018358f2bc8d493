//! Real submanifolds `M = {ρ_1 = .. = ρ_ℓ = 0}` of C^m given by polynomial
//! defining functions, analysed at exact rational points.
//!
//! Real coordinates are interleaved `(x_1, y_1, .., x_m, y_m)` and the
//! ambient metric is the flat one. A vector `Z` over the columns of
//! `PointData::b` stands for the real tangent vector `X = Re(Σ (BZ)_μ ∂/∂z_μ)`;
//! `iZ` stands for `JX`. With this convention all three routes to the scalar
//! Levi form (complex Hessian, bracket of a `T^{1,0}` section, second
//! fundamental form) agree with constant factor [`LEVI_CONSTANT`].

mod jet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use jet::MatJet;

use crate::error::{Error, Result};
use crate::exact::{CMatrix, GaussianRational, HermitianMatrix, Rational, Signature};
use crate::poly::{Poly, PointC, RealPoly, WPoly};

/// Ratio between the bracket/second-fundamental-form routes and the Hessian route.
pub const LEVI_CONSTANT: i64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedCR {
    m: usize,
    rho: Vec<WPoly>,
}

/// Exact local data of `M` at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointData {
    pub x: PointC,
    /// `ℓ×m`, entries `∂ρ_j/∂z_μ(x)`.
    pub drho: CMatrix,
    /// `m×n`, columns span `T^{1,0}_x M`.
    pub b: CMatrix,
    pub n: usize,
    pub k: usize,
    pub generic: bool,
    /// `∂²ρ_j/∂z_μ∂zbar_ν(x)`, one per defining function.
    pub hessians: Vec<HermitianMatrix>,
    /// `ℓ×2m` real gradients.
    pub real_grad: CMatrix,
    /// Inverse of the Gram matrix of the real gradients.
    pub gram_inv: CMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedReport {
    pub cr_dim: usize,
    pub cr_codim: usize,
    pub generic: bool,
    pub levi_matrix: Vec<Vec<String>>,
    pub signature: [usize; 3],
    pub dual_cone_member: bool,
}

impl EmbeddedCR {
    pub fn new(m: usize, rho: Vec<WPoly>) -> Result<Self> {
        if m == 0 || rho.is_empty() {
            return Err(Error::DimensionMismatch(
                "need m >= 1 and at least one defining function".into(),
            ));
        }
        for r in &rho {
            if r.m() != m {
                return Err(Error::DimensionMismatch(format!(
                    "defining function in C^{} for manifold in C^{m}",
                    r.m()
                )));
            }
            if !r.is_real_valued() {
                return Err(Error::NotRealValued(r.to_string()));
            }
        }
        Ok(Self { m, rho })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> usize {
        self.rho.len()
    }

    pub fn rho(&self) -> &[WPoly] {
        &self.rho
    }

    fn holomorphic_gradient(&self) -> Vec<Vec<WPoly>> {
        self.rho
            .iter()
            .map(|r| (1..=self.m).map(|mu| r.wirtinger_d(mu).unwrap()).collect())
            .collect()
    }

    fn real_gradient(&self) -> Vec<Vec<WPoly>> {
        self.rho
            .iter()
            .map(|r| (0..2 * self.m).map(|dir| r.real_partial(dir)).collect())
            .collect()
    }

    pub fn analyze_point(&self, x: &PointC) -> Result<PointData> {
        if x.dim() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "point of dimension {} in C^{}",
                x.dim(),
                self.m
            )));
        }
        for (j, r) in self.rho.iter().enumerate() {
            let v = r.eval(x)?;
            if !v.is_zero() {
                return Err(Error::PointNotOnManifold {
                    index: j + 1,
                    value: v.to_string(),
                });
            }
        }
        let ell = self.ell();
        let real_grad = eval_matrix(&self.real_gradient(), x)?;
        let real_rank = real_grad.rank();
        if real_rank != ell {
            return Err(Error::DegenerateDifferentials {
                rank: real_rank,
                expected: ell,
            });
        }
        let drho = eval_matrix(&self.holomorphic_gradient(), x)?;
        let (rank, b) = drho.rank_and_kernel();
        let n = self.m - rank;
        let gram_inv = gram(&real_grad).inverse()?;
        let hessians = self
            .rho
            .iter()
            .map(|r| r.complex_hessian(x))
            .collect::<Result<_>>()?;
        Ok(PointData {
            x: x.clone(),
            drho,
            b,
            n,
            k: 2 * self.m - ell - 2 * n,
            generic: rank == ell,
            hessians,
            real_grad,
            gram_inv,
        })
    }

    fn check_xi(&self, xi: &[Rational]) -> Result<()> {
        if xi.len() != self.ell() {
            return Err(Error::DimensionMismatch(format!(
                "conormal has {} coefficients, expected {}",
                xi.len(),
                self.ell()
            )));
        }
        Ok(())
    }

    fn check_z(&self, pd: &PointData, z: &[GaussianRational]) -> Result<()> {
        if z.len() != pd.n {
            return Err(Error::DimensionMismatch(format!(
                "vector has {} coordinates, CR dimension is {}",
                z.len(),
                pd.n
            )));
        }
        Ok(())
    }

    /// Scalar Levi form of `Σ ξ_j d^c ρ_j` on `T^{1,0}_x M` in the basis `B`.
    ///
    /// Its quadratic value at `Z` is `Σ ξ_j ∂²ρ_j/∂z_μ∂zbar_ν W_μ conj(W_ν)` with
    /// `W = BZ`, so the matrix is `Σ_j ξ_j B* H_jᵀ B`.
    pub fn scalar_levi(&self, pd: &PointData, xi: &[Rational]) -> Result<HermitianMatrix> {
        self.check_xi(xi)?;
        let mut acc = HermitianMatrix::zeros(pd.n);
        for (h, c) in pd.hessians.iter().zip(xi) {
            acc = acc.add(&h.transpose().congruence(&pd.b)?.scale(c));
        }
        Ok(acc)
    }

    pub fn levi_signature(&self, pd: &PointData, xi: &[Rational]) -> Result<Signature> {
        Ok(self.scalar_levi(pd, xi)?.inertia())
    }

    pub fn dual_cone_member(&self, pd: &PointData, xi: &[Rational]) -> Result<bool> {
        Ok(self.levi_signature(pd, xi)?.n_neg == 0)
    }

    /// Coefficients `c_h` of the vector-valued Levi form `Σ c_h ∇ρ_h` at `X = Re(BZ)`.
    pub fn normal_levi(&self, pd: &PointData, z: &[GaussianRational]) -> Result<Vec<Rational>> {
        self.check_z(pd, z)?;
        let values = pd
            .hessians
            .iter()
            .map(|h| h.transpose().congruence(&pd.b).and_then(|l| l.quadratic_value(z)))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..self.ell())
            .map(|h| {
                let mut c = Rational::zero();
                for (j, v) in values.iter().enumerate() {
                    c -= &pd.gram_inv[(j, h)].re * v;
                }
                c
            })
            .collect())
    }

    /// `B(X,X) + B(JX,JX)` in the gradient basis, with the second fundamental
    /// form computed from the tangent projector `I − Gᵀ(GGᵀ)⁻¹G`.
    pub fn second_fundamental_sum(
        &self,
        pd: &PointData,
        z: &[GaussianRational],
    ) -> Result<Vec<Rational>> {
        self.check_z(pd, z)?;
        let d = 2 * self.m;
        let g = poly_jet(&self.real_gradient(), &pd.x)?;
        let gram_j = g.mul(&g.transpose())?;
        let kinv = gram_j.inverse().map_err(|_| Error::GramSingular)?;
        let normal = g.transpose().mul(&kinv)?.mul(&g)?;
        let proj = MatJet::identity(d, d).sub(&normal);

        let w = pd.b.mul_vec(z)?;
        let iw: Vec<GaussianRational> = w.iter().map(GaussianRational::mul_i).collect();
        let mut total = vec![Rational::zero(); self.ell()];
        for v in [w, iw] {
            let x = real_vector(&v);
            let dx = proj.directional(&x).mul_vec(&x)?;
            let coeffs = kinv.val.checked_mul(&g.val)?.mul_vec(&dx)?;
            for (t, c) in total.iter_mut().zip(coeffs) {
                debug_assert!(c.im.is_zero());
                *t += c.re;
            }
        }
        Ok(total)
    }

    /// `Σ_j ξ_j d^cρ_j([W̄, W]) / 2i` at `x`, where `W(p)` is the projection of
    /// the constant field `BZ` onto `ker ∂ρ(p)`.
    pub fn bracket_levi_oracle(
        &self,
        pd: &PointData,
        xi: &[Rational],
        z: &[GaussianRational],
    ) -> Result<Rational> {
        self.check_xi(xi)?;
        self.check_z(pd, z)?;
        let d = 2 * self.m;
        let pivots = pd.drho.transpose().rref().1;
        let grad = self.holomorphic_gradient();
        let rows: Vec<Vec<WPoly>> = pivots.iter().map(|&j| grad[j].clone()).collect();
        let dj = poly_jet(&rows, &pd.x)?;
        let kinv = dj
            .mul(&dj.adjoint())?
            .inverse()
            .map_err(|_| Error::GramSingular)?;
        let proj = MatJet::identity(self.m, d).sub(&dj.adjoint().mul(&kinv)?.mul(&dj)?);

        let v = CMatrix::column_vector(pd.b.mul_vec(z)?);
        let wj = proj.mul(&MatJet::constant(v, d))?;
        let w = wj.val.column(0);
        // a_μ = W̄(W_μ) = Σ_ν conj(W_ν) ∂W_μ/∂zbar_ν, ∂/∂zbar = (∂_x + i∂_y)/2
        let half = GaussianRational::frac(1, 2);
        let a: Vec<GaussianRational> = (0..self.m)
            .map(|mu| {
                let mut s = GaussianRational::zero();
                for (nu, wn) in w.iter().enumerate() {
                    let dbar = &(&wj.d[2 * nu][(mu, 0)] + &wj.d[2 * nu + 1][(mu, 0)].mul_i()) * &half;
                    s += &(&wn.conj() * &dbar);
                }
                s
            })
            .collect();
        // d^cρ = i(∂̄ρ − ∂ρ) on [W̄,W] = Σ a_μ ∂_μ − Σ conj(a_μ) ∂̄_μ gives −2i Re ∂ρ(a)
        let mut total = Rational::zero();
        for (j, c) in xi.iter().enumerate() {
            let pairing: GaussianRational = pd.drho.row(j).iter().zip(&a).map(|(p, q)| p * q).sum();
            total -= c * &pairing.re;
        }
        Ok(total)
    }

    pub fn report(&self, pd: &PointData, xi: &[Rational]) -> Result<EmbeddedReport> {
        let levi = self.scalar_levi(pd, xi)?;
        let sig = levi.inertia();
        Ok(EmbeddedReport {
            cr_dim: pd.n,
            cr_codim: pd.k,
            generic: pd.generic,
            levi_matrix: (0..pd.n)
                .map(|r| levi.matrix().row(r).iter().map(ToString::to_string).collect())
                .collect(),
            signature: sig.as_array(),
            dual_cone_member: sig.n_neg == 0,
        })
    }
}

/// Tube over the real submanifold `{r_j = 0}` of R^m: `ρ_j(z) = r_j((z+zbar)/2)`.
pub fn make_tube(base: &[RealPoly]) -> Result<EmbeddedCR> {
    let m = base
        .first()
        .map(RealPoly::dim)
        .ok_or_else(|| Error::DimensionMismatch("empty tube base".into()))?;
    let half = GaussianRational::frac(1, 2);
    let subs: Vec<Poly> = (0..m)
        .map(|mu| (&Poly::var(2 * m, mu) + &Poly::var(2 * m, m + mu)).scale(&half))
        .collect();
    let mut rho = Vec::with_capacity(base.len());
    for r in base {
        if r.dim() != m {
            return Err(Error::DimensionMismatch("tube base polynomials differ in dimension".into()));
        }
        if !r.has_real_coefficients() {
            return Err(Error::NotRealValued(r.to_string()));
        }
        rho.push(WPoly::from_poly(m, r.poly().compose(&subs)));
    }
    EmbeddedCR::new(m, rho)
}

/// Polynomial biholomorphism of C^m together with its polynomial inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyAutomorphism {
    forward: Vec<WPoly>,
    inverse: Vec<WPoly>,
}

impl PolyAutomorphism {
    pub fn new(forward: Vec<WPoly>, inverse: Vec<WPoly>) -> Result<Self> {
        let m = forward.len();
        if inverse.len() != m || forward.iter().chain(&inverse).any(|p| p.m() != m) {
            return Err(Error::DimensionMismatch("map components must live in C^m".into()));
        }
        for p in forward.iter().chain(&inverse) {
            if !p.is_holomorphic() {
                return Err(Error::NotHolomorphic(p.to_string()));
            }
        }
        for (name, a, b) in [("forward∘inverse", &forward, &inverse), ("inverse∘forward", &inverse, &forward)] {
            for (mu, p) in a.iter().enumerate() {
                if p.compose_holomorphic(b) != WPoly::z(m, mu + 1) {
                    return Err(Error::NotAnInverse(format!("{name} differs from z{}", mu + 1)));
                }
            }
        }
        Ok(Self { forward, inverse })
    }

    pub fn identity(m: usize) -> Self {
        let id: Vec<WPoly> = (1..=m).map(|mu| WPoly::z(m, mu)).collect();
        Self {
            forward: id.clone(),
            inverse: id,
        }
    }

    pub fn apply(&self, x: &PointC) -> Result<PointC> {
        Ok(PointC::new(
            self.forward.iter().map(|p| p.eval(x)).collect::<Result<_>>()?,
        ))
    }
}

/// Image of `(M, x)` under `Φ`: `ρ'_j = ρ_j ∘ Φ⁻¹` and `x' = Φ(x)`.
pub fn pushforward(
    manifold: &EmbeddedCR,
    phi: &PolyAutomorphism,
    x: &PointC,
) -> Result<(EmbeddedCR, PointC)> {
    if phi.forward.len() != manifold.m {
        return Err(Error::DimensionMismatch("map and manifold dimensions differ".into()));
    }
    let rho = manifold
        .rho
        .iter()
        .map(|r| r.compose_holomorphic(&phi.inverse))
        .collect();
    Ok((EmbeddedCR::new(manifold.m, rho)?, phi.apply(x)?))
}

fn eval_matrix(entries: &[Vec<WPoly>], x: &PointC) -> Result<CMatrix> {
    CMatrix::from_rows(
        entries
            .iter()
            .map(|row| row.iter().map(|p| p.eval(x)).collect::<Result<_>>())
            .collect::<Result<_>>()?,
    )
}

fn poly_jet(entries: &[Vec<WPoly>], x: &PointC) -> Result<MatJet> {
    let dirs = 2 * x.dim();
    let val = eval_matrix(entries, x)?;
    let d = (0..dirs)
        .map(|dir| {
            let diff: Vec<Vec<WPoly>> = entries
                .iter()
                .map(|row| row.iter().map(|p| p.real_partial(dir)).collect())
                .collect();
            eval_matrix(&diff, x)
        })
        .collect::<Result<_>>()?;
    Ok(MatJet { val, d })
}

fn gram(g: &CMatrix) -> CMatrix {
    g * &g.transpose()
}

/// Interleaved real coordinates of `Re(Σ w_μ ∂/∂z_μ)`.
fn real_vector(w: &[GaussianRational]) -> Vec<GaussianRational> {
    let half = Rational::new(1.into(), 2.into());
    w.iter()
        .flat_map(|c| {
            [
                GaussianRational::real(&c.re * &half),
                GaussianRational::real(&c.im * &half),
            ]
        })
        .collect()
}

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::gaussian::{GaussianRational, Rational};
use super::matrix::CMatrix;
use crate::error::{Error, Result};

/// Inertia of a Hermitian form: counts of positive, zero and negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Signature {
    pub fn new(n_pos: usize, n_zero: usize, n_neg: usize) -> Self {
        Self { n_pos, n_zero, n_neg }
    }

    pub fn dim(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.n_pos, self.n_zero, self.n_neg]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_pos, self.n_zero, self.n_neg)
    }
}

/// Square matrix with `a[(r,c)] == conj(a[(c,r)])`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NonHermitianInput(format!(
                "{}x{} is not square",
                m.rows(),
                m.cols()
            )));
        }
        for r in 0..m.rows() {
            for c in r..m.cols() {
                if m[(r, c)] != m[(c, r)].conj() {
                    return Err(Error::NonHermitianInput(format!(
                        "entry ({r},{c}) = {} but ({c},{r}) = {}",
                        m[(r, c)],
                        m[(c, r)]
                    )));
                }
            }
        }
        Ok(Self(m))
    }

    pub fn zeros(n: usize) -> Self {
        Self(CMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Self(CMatrix::identity(n))
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        Self(CMatrix::from_fn(n, n, |r, c| {
            if r == c {
                GaussianRational::real(d[r].clone())
            } else {
                GaussianRational::zero()
            }
        }))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    /// `P* A P`; stays Hermitian for any `P` with matching row count.
    pub fn congruence(&self, p: &CMatrix) -> Result<Self> {
        let m = p.adjoint().checked_mul(&self.0)?.checked_mul(p)?;
        Ok(Self(m))
    }

    /// The transpose, equal to the entrywise conjugate.
    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self(self.0.scale(&GaussianRational::real(r.clone())))
    }

    /// Value of the Hermitian form `v* A v`, always real.
    pub fn quadratic_value(&self, v: &[GaussianRational]) -> Result<Rational> {
        let av = self.0.mul_vec(v)?;
        let s: GaussianRational = v.iter().zip(&av).map(|(a, b)| a.conj() * b).sum();
        debug_assert!(s.im.is_zero());
        Ok(s.re)
    }

    /// Coefficients of `det(λI − A)` from the leading `λ^n` down to the constant term.
    ///
    /// Faddeev–LeVerrier recursion; exact over the rationals.
    pub fn char_poly(&self) -> Vec<Rational> {
        let n = self.n();
        let a = &self.0;
        let mut coeffs = vec![GaussianRational::one()];
        let mut m = CMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k)/k
            let mut next = a * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[k - 1];
            }
            let am = a * &next;
            let c = am
                .trace()
                .scale(&-Rational::new(1.into(), (k as i64).into()));
            m = next;
            coeffs.push(c);
        }
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.im.is_zero(), "Hermitian characteristic polynomial has real coefficients");
                c.re
            })
            .collect()
    }

    /// Inertia by Descartes' rule of signs on the characteristic polynomial.
    ///
    /// All roots are real for Hermitian input, so sign changes of `p(λ)` and
    /// `p(−λ)` (after removing the factor `λ^{n_zero}`) count the positive and
    /// negative eigenvalues exactly.
    pub fn inertia_descartes(&self) -> Signature {
        descartes_inertia(&self.char_poly())
    }

    /// Inertia by Hermitian congruence diagonalisation (LDL* with 1x1 and 2x2 pivots).
    pub fn inertia_ldl(&self) -> Signature {
        let mut a = self.0.clone();
        let mut active: Vec<usize> = (0..self.n()).collect();
        let (mut pos, mut neg) = (0, 0);
        loop {
            if let Some(&p) = active.iter().find(|&&i| !a[(i, i)].is_zero()) {
                let d = a[(p, p)].re.clone();
                if d.is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                active.retain(|&i| i != p);
                let inv = GaussianRational::real(d.recip());
                for &i in &active {
                    for &j in &active {
                        let upd = &(&a[(i, p)] * &inv) * &a[(p, j)];
                        a[(i, j)] -= &upd;
                    }
                }
                continue;
            }
            let pair = active.iter().enumerate().find_map(|(ix, &i)| {
                active[ix + 1..]
                    .iter()
                    .find(|&&j| !a[(i, j)].is_zero())
                    .map(|&j| (i, j))
            });
            let Some((p, q)) = pair else { break };
            // Zero diagonal block [[0, b], [b̄, 0]] has one positive and one negative eigenvalue.
            pos += 1;
            neg += 1;
            active.retain(|&i| i != p && i != q);
            let b = a[(p, q)].clone();
            let binv = b.inv().expect("nonzero pivot");
            let bcinv = b.conj().inv().expect("nonzero pivot");
            // inverse of [[0, b], [b̄, 0]] is [[0, 1/b̄], [1/b, 0]]
            for &i in &active {
                for &j in &active {
                    let upd = &(&(&a[(i, p)] * &bcinv) * &a[(q, j)])
                        + &(&(&a[(i, q)] * &binv) * &a[(p, j)]);
                    a[(i, j)] -= &upd;
                }
            }
        }
        Signature::new(pos, self.n() - pos - neg, neg)
    }

    /// Inertia, computed by the Descartes route and checked against LDL*.
    pub fn inertia(&self) -> Signature {
        let s = self.inertia_descartes();
        let t = self.inertia_ldl();
        assert_eq!(s, t, "inertia routes disagree on {:?}", self.0);
        s
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a Rational>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for c in coeffs.filter(|c| !c.is_zero()) {
        let p = c.is_positive();
        if last.is_some_and(|l| l != p) {
            changes += 1;
        }
        last = Some(p);
    }
    changes
}

/// Inertia of a real-rooted monic polynomial given high-to-low coefficients.
pub fn descartes_inertia(coeffs: &[Rational]) -> Signature {
    let n = coeffs.len() - 1;
    let n_zero = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let trimmed = &coeffs[..coeffs.len() - n_zero];
    let n_pos = sign_changes(trimmed.iter());
    // p(−λ): the coefficient of λ^j picks up (−1)^j.
    let flipped: Vec<Rational> = trimmed
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let power = n - idx;
            if power % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            }
        })
        .collect();
    let n_neg = sign_changes(flipped.iter());
    Signature::new(n_pos, n_zero, n_neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gaussian::rat_int;

    fn herm(rows: &[&[i64]]) -> HermitianMatrix {
        HermitianMatrix::new(CMatrix::from_ints(rows)).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| rat_int(x)).collect::<Vec<_>>();
        assert_eq!(herm(&[&[1, 0], &[0, 2]]).char_poly(), ints(&[1, -3, 2]));
        assert_eq!(HermitianMatrix::zeros(3).char_poly(), ints(&[1, 0, 0, 0]));
        assert_eq!(herm(&[&[0, 1], &[1, 0]]).char_poly(), ints(&[1, 0, -1]));
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(HermitianMatrix::identity(2).inertia(), Signature::new(2, 0, 0));
        assert_eq!(herm(&[&[1, 0], &[0, -1]]).inertia(), Signature::new(1, 0, 1));
        assert_eq!(HermitianMatrix::zeros(3).inertia(), Signature::new(0, 3, 0));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_rows(vec![vec!["1".parse().unwrap(), "i".parse().unwrap()], vec![
            "i".parse().unwrap(),
            "0".parse().unwrap(),
        ]])
        .unwrap();
        assert!(matches!(HermitianMatrix::new(m), Err(Error::NonHermitianInput(_))));
        let m = CMatrix::from_rows(vec![vec!["i".parse().unwrap()]]).unwrap();
        assert!(matches!(HermitianMatrix::new(m), Err(Error::NonHermitianInput(_))));
    }

    #[test]
    fn char_poly_vanishes_on_diagonal_eigenvalues() {
        let d = [rat_int(3), Rational::new((-1).into(), 2.into()), rat_int(0), rat_int(3)];
        let p = HermitianMatrix::diagonal(&d).char_poly();
        for lam in &d {
            let v = p.iter().fold(Rational::zero(), |acc, c| acc * lam + c);
            assert!(v.is_zero());
        }
        assert_eq!(HermitianMatrix::diagonal(&d).inertia(), Signature::new(2, 1, 1));
    }

    #[test]
    fn two_by_two_pivot_path() {
        // all-zero diagonal forces the 2x2 branch of LDL*
        let h = herm(&[&[0, 2, 1], &[2, 0, 3], &[1, 3, 0]]);
        assert_eq!(h.inertia_ldl(), h.inertia_descartes());
    }
}

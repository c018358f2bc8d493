use crate::error::Result;
use crate::exact::{CMatrix, GaussianRational};

/// A matrix-valued function known to first order at a point: its value and
/// its derivative along each real coordinate direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatJet {
    pub val: CMatrix,
    pub d: Vec<CMatrix>,
}

impl MatJet {
    pub fn constant(val: CMatrix, dirs: usize) -> Self {
        let d = vec![CMatrix::zeros(val.rows(), val.cols()); dirs];
        Self { val, d }
    }

    pub fn identity(n: usize, dirs: usize) -> Self {
        Self::constant(CMatrix::identity(n), dirs)
    }

    pub fn dirs(&self) -> usize {
        self.d.len()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let val = self.val.checked_mul(&rhs.val)?;
        let d = self
            .d
            .iter()
            .zip(&rhs.d)
            .map(|(da, db)| Ok(&da.checked_mul(&rhs.val)? + &self.val.checked_mul(db)?))
            .collect::<Result<_>>()?;
        Ok(Self { val, d })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            val: &self.val - &rhs.val,
            d: self.d.iter().zip(&rhs.d).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            val: self.val.adjoint(),
            d: self.d.iter().map(CMatrix::adjoint).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            val: self.val.transpose(),
            d: self.d.iter().map(CMatrix::transpose).collect(),
        }
    }

    /// `(A⁻¹)' = −A⁻¹ A' A⁻¹`.
    pub fn inverse(&self) -> Result<Self> {
        let k = self.val.inverse()?;
        let d = self
            .d
            .iter()
            .map(|da| Ok(-&k.checked_mul(da)?.checked_mul(&k)?))
            .collect::<Result<_>>()?;
        Ok(Self { val: k, d })
    }

    /// Derivative along the real direction with components `dir`.
    pub fn directional(&self, dir: &[GaussianRational]) -> CMatrix {
        let mut out = CMatrix::zeros(self.val.rows(), self.val.cols());
        for (c, dm) in dir.iter().zip(&self.d) {
            out = &out + &dm.scale(c);
        }
        out
    }
}

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gaussian::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix of small integers; convenient in tests and built-in data.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Builds a matrix whose columns are the given vectors (all of equal length).
    pub fn from_columns(cols: &[Vec<GaussianRational>], rows: usize) -> Self {
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn column_vector(v: Vec<GaussianRational>) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        }))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Fraction-free echelon form.
    ///
    /// Each row is first scaled to Gaussian integers, then Bareiss elimination
    /// with first-nonzero pivoting runs over Z[i]. Returns the echelon rows and
    /// the pivot column of each nonzero row.
    fn bareiss_echelon(&self) -> (Vec<Vec<GaussInt>>, Vec<usize>, Vec<usize>) {
        let mut a: Vec<Vec<GaussInt>> = (0..self.rows).map(|r| integer_row(self.row(r))).collect();
        let mut perm: Vec<usize> = (0..self.rows).collect();
        let mut pivots = Vec::new();
        let mut prev = GaussInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            perm.swap(r, p);
            for i in r + 1..self.rows {
                let lead_zero = a[i][c].is_zero();
                for j in c + 1..self.cols {
                    if a[i][j].is_zero() && (lead_zero || a[r][j].is_zero()) {
                        continue;
                    }
                    let num = if lead_zero {
                        &a[r][c] * &a[i][j]
                    } else {
                        &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j])
                    };
                    a[i][j] = num.exact_div(&prev);
                }
                a[i][c] = GaussInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        (a, pivots, perm)
    }

    pub fn rank(&self) -> usize {
        self.bareiss_echelon().1.len()
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Computed from the fraction-free echelon form by normalising each pivot
    /// to one and eliminating upwards, so the result is unique.
    pub fn rref(&self) -> (CMatrix, Vec<usize>) {
        let (ech, pivots, _) = self.bareiss_echelon();
        let mut m = Self::zeros(self.rows, self.cols);
        for (r, row) in ech.iter().enumerate().take(pivots.len()) {
            for (c, v) in row.iter().enumerate() {
                m[(r, c)] = v.to_gaussian();
            }
        }
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let inv = m[(r, pc)].inv().expect("nonzero pivot");
            for c in pc..self.cols {
                m[(r, c)] = &m[(r, c)] * &inv;
            }
            for above in 0..r {
                let f = m[(above, pc)].clone();
                if f.is_zero() {
                    continue;
                }
                for c in pc..self.cols {
                    let d = &f * &m[(r, c)];
                    m[(above, c)] -= &d;
                }
            }
        }
        (m, pivots)
    }

    /// Rank and a basis of the null space, one kernel vector per column.
    ///
    /// Each free column `f` contributes the vector with a one in slot `f`,
    /// minus the reduced row entries in the pivot slots and zeros elsewhere.
    pub fn rank_and_kernel(&self) -> (usize, CMatrix) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = GaussianRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                k[(pc, j)] = -&r[(row, f)];
            }
        }
        (pivots.len(), k)
    }

    /// Solves `self * x = b` for one column `b`; `None` when inconsistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Result<Option<Vec<GaussianRational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let aug = self.hstack(&Self::column_vector(b.to_vec()))?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn determinant(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        if self.rows == 0 {
            return Ok(GaussianRational::one());
        }
        // Undo the row scaling applied when clearing denominators.
        let mut scale = GaussianRational::one();
        for r in 0..self.rows {
            scale = &scale * &GaussianRational::real(Rational::from_integer(row_denominator(self.row(r))));
        }
        let (ech, pivots, perm) = self.bareiss_echelon();
        if pivots.len() < self.rows {
            return Ok(GaussianRational::zero());
        }
        let det = ech[self.rows - 1][self.cols - 1].to_gaussian();
        let sign = if permutation_parity(&perm) { -1 } else { 1 };
        Ok((det * GaussianRational::int(sign)).checked_div(&scale)?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n))?.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// Panics on a shape mismatch; see [`CMatrix::checked_mul`].
impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.checked_mul(rhs).expect("matrix shapes")
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

fn permutation_parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

fn row_denominator(row: &[GaussianRational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, v| {
        acc.lcm(v.re.denom()).lcm(v.im.denom())
    })
}

fn integer_row(row: &[GaussianRational]) -> Vec<GaussInt> {
    let d = row_denominator(row);
    row.iter()
        .map(|v| GaussInt {
            re: (&v.re * Rational::from_integer(d.clone())).to_integer(),
            im: (&v.im * Rational::from_integer(d.clone())).to_integer(),
        })
        .collect()
}

/// Gaussian integer used only inside fraction-free elimination.
#[derive(Clone, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        Self {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Division known to be exact in Z[i].
    fn exact_div(&self, d: &GaussInt) -> GaussInt {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        debug_assert!(rr.is_zero() && ri.is_zero(), "Bareiss division not exact");
        GaussInt { re: qr, im: qi }
    }

    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(
            Rational::from_integer(self.re.clone()),
            Rational::from_integer(self.im.clone()),
        )
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn kernel_of_projection() {
        let a = CMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0]]);
        let (rank, k) = a.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(k, CMatrix::from_ints(&[&[0], &[0], &[1]]));
    }

    #[test]
    fn kernel_of_zero_is_identity() {
        let (rank, k) = CMatrix::zeros(2, 2).rank_and_kernel();
        assert_eq!(rank, 0);
        assert_eq!(k, CMatrix::identity(2));
    }

    #[test]
    fn kernel_of_row_one_i() {
        let a = CMatrix::from_rows(vec![vec![g("1"), g("i")]]).unwrap();
        let (rank, k) = a.rank_and_kernel();
        assert_eq!(rank, 1);
        assert_eq!(k.column(0), vec![g("-i"), g("1")]);
        assert!((&a * &k).is_zero());
    }

    #[test]
    fn determinant_and_inverse() {
        let a = CMatrix::from_rows(vec![
            vec![g("0"), g("2"), g("1/2")],
            vec![g("i"), g("1"), g("0")],
            vec![g("3"), g("0"), g("1-i")],
        ])
        .unwrap();
        // cofactor expansion along the first row
        let expected = -g("2") * (g("i") * g("1-i") - g("0")) + g("1/2") * (g("0") - g("3"));
        assert_eq!(a.determinant().unwrap(), expected);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, CMatrix::identity(3));
        assert_eq!(CMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = CMatrix::from_ints(&[&[1, 1], &[2, 2]]);
        assert_eq!(a.solve(&[g("1"), g("3")]).unwrap(), None);
        let x = a.solve(&[g("1"), g("2")]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![g("1"), g("2")]);
    }

    #[test]
    fn rref_is_canonical() {
        let a = CMatrix::from_rows(vec![
            vec![g("2"), g("4"), g("i")],
            vec![g("1"), g("2"), g("0")],
        ])
        .unwrap();
        let (r, p) = a.rref();
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r, CMatrix::from_ints(&[&[1, 2, 0], &[0, 0, 1]]));
    }
}

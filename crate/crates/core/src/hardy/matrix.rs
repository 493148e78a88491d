use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::HardyError;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Complex64::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diag((0..n).map(|_| Complex64::new(1.0, 0.0)))
    }

    pub fn from_diag(diag: impl IntoIterator<Item = Complex64>) -> Self {
        let diag: Vec<Complex64> = diag.into_iter().collect();
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    /// Builds a matrix from columns of length `n`.
    pub fn from_columns(n: usize, columns: &[Vec<Complex64>]) -> Self {
        Self::from_fn(n, |i, j| columns[j][i])
    }

    /// Row-major entries; `None` unless `data.len()` is a perfect square.
    pub fn from_row_major(data: Vec<Complex64>) -> Option<Self> {
        let n = (0..=data.len()).find(|n| n * n >= data.len())?;
        (n * n == data.len()).then_some(Matrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    fn check_dim(&self, other: &Matrix) -> Result<(), HardyError> {
        if self.n != other.n {
            return Err(HardyError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, HardyError> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let x = self[(i, l)];
                if x.is_zero() {
                    continue;
                }
                let src = other.row(l);
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += x * s;
                }
            }
        }
        Ok(out)
    }

    /// Leading `k x k` block of `self * other`, summing over the full order.
    pub fn block_product(&self, other: &Matrix, k: usize) -> Result<Matrix, HardyError> {
        self.check_dim(other)?;
        self.check_block(k)?;
        Ok(Matrix::from_fn(k, |i, j| {
            (0..self.n).map(|l| self[(i, l)] * other[(l, j)]).sum()
        }))
    }

    pub fn check_block(&self, k: usize) -> Result<(), HardyError> {
        if k > self.n {
            return Err(HardyError::BlockTooLarge { k, n: self.n });
        }
        Ok(())
    }

    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(Complex64::conj).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, HardyError> {
        self.check_dim(other)?;
        Ok(Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x - y)
                .collect(),
        })
    }

    pub fn leading_block(&self, k: usize) -> Result<Matrix, HardyError> {
        self.check_block(k)?;
        Ok(Matrix::from_fn(k, |i, j| self[(i, j)]))
    }

    /// The trailing `(n - 1) x (n - 1)` block.
    pub fn trailing_block(&self) -> Matrix {
        Matrix::from_fn(self.n.saturating_sub(1), |i, j| self[(i + 1, j + 1)])
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|x| x.im.abs()).fold(0.0, f64::max)
    }

    /// `max |self - other|` entrywise.
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64, HardyError> {
        Ok(self.sub(other)?.max_abs())
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self[(i, j)].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

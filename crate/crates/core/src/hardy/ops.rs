use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::matrix::Matrix;
use super::series::{CoeffVec, TaylorSeries};
use crate::error::{HardyError, MoebiusError};
use crate::moebius::{AnalyticWeight, Moebius};

/// Whether a matrix is the true compression `P_N T P_N` or only a product
/// of compressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    ExactCompression,
    ProductApproximation,
}

/// `N x N` finite section of an operator on `H^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncOp {
    matrix: Matrix,
    exactness: Exactness,
}

impl TruncOp {
    pub fn new(matrix: Matrix, exactness: Exactness) -> Self {
        TruncOp { matrix, exactness }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n), Exactness::ExactCompression)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.dim()
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    /// Conjugate transpose; `(P T P)^* = P T^* P`, so exactness is kept.
    pub fn adjoint(&self) -> TruncOp {
        TruncOp::new(self.matrix.adjoint(), self.exactness)
    }

    /// Product of sections. It is again an exact compression when the left
    /// factor is lower triangular (multiplication by an analytic symbol) or
    /// the right factor is upper triangular (it preserves polynomials of
    /// degree `< N`).
    pub fn mul(&self, other: &TruncOp) -> Result<TruncOp, HardyError> {
        let both_exact = self.exactness == Exactness::ExactCompression
            && other.exactness == Exactness::ExactCompression;
        let exact =
            both_exact && (self.matrix.is_lower_triangular() || other.matrix.is_upper_triangular());
        Ok(TruncOp::new(
            self.matrix.mul(&other.matrix)?,
            if exact {
                Exactness::ExactCompression
            } else {
                Exactness::ProductApproximation
            },
        ))
    }

    pub fn scale(&self, s: Complex64) -> TruncOp {
        TruncOp::new(self.matrix.scale(s), self.exactness)
    }

    /// `max |T - T^*|` over the whole matrix.
    pub fn hermitian_residual(&self) -> f64 {
        let n = self.order();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Leading `k x k` block of `T^* T - I`.
    pub fn unitarity_residual(&self, k: usize) -> Result<f64, HardyError> {
        let gram = self.matrix.adjoint().block_product(&self.matrix, k)?;
        gram.max_abs_diff(&Matrix::identity(k))
    }

    /// Leading `k x k` block of `T^2 - I`.
    pub fn involution_residual(&self, k: usize) -> Result<f64, HardyError> {
        let sq = self.matrix.block_product(&self.matrix, k)?;
        sq.max_abs_diff(&Matrix::identity(k))
    }
}

/// Columns `psi * phi^j`, `j < n`, each truncated to `n` coefficients.
fn power_columns(start: CoeffVec, phi: &Moebius<f64>, n: usize) -> Result<Matrix, HardyError> {
    if !phi.is_self_map()? {
        return Err(MoebiusError::NotSelfMap.into());
    }
    let step = phi.taylor_coeffs(n)?;
    let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut col = start;
    while columns.len() < n {
        let next = col.mul_truncated(&step);
        columns.push(core::mem::replace(&mut col, next).into_vec());
    }
    Ok(Matrix::from_columns(n, &columns))
}

/// `C_phi f = f ∘ phi`: column `j` holds the coefficients of `phi^j`.
pub fn composition_matrix(phi: &Moebius<f64>, n: usize) -> Result<TruncOp, HardyError> {
    Ok(TruncOp::new(
        power_columns(CoeffVec::unit(n), phi, n)?,
        Exactness::ExactCompression,
    ))
}

/// `T_psi f = psi f`: lower-triangular Toeplitz, entry `(i, j)` is the
/// coefficient `i - j` of `psi`.
pub fn toeplitz_matrix(psi: &AnalyticWeight<f64>, n: usize) -> Result<TruncOp, HardyError> {
    let coeffs = psi.taylor_coeffs(n)?;
    let m = Matrix::from_fn(n, |i, j| {
        if i >= j {
            coeffs[i - j]
        } else {
            Complex64::zero()
        }
    });
    Ok(TruncOp::new(m, Exactness::ExactCompression))
}

/// `W_{psi,phi} = T_psi C_phi`: column `j` holds the coefficients of
/// `psi * phi^j`.
pub fn weighted_comp_matrix(
    psi: &AnalyticWeight<f64>,
    phi: &Moebius<f64>,
    n: usize,
) -> Result<TruncOp, HardyError> {
    Ok(TruncOp::new(
        power_columns(psi.taylor_coeffs(n)?, phi, n)?,
        Exactness::ExactCompression,
    ))
}

/// `U_theta f = f(e^{i theta} z)`, i.e. `diag(e^{i n theta})`.
pub fn rotation_unitary(theta: f64, n: usize) -> TruncOp {
    TruncOp::new(
        Matrix::from_diag((0..n).map(|k| Complex64::from_polar(1.0, k as f64 * theta))),
        Exactness::ExactCompression,
    )
}

/// Splits `C_phi` with `phi(0) = 0` as `1 ⊕ C_phi|_{zH^2}`.
///
/// Row and column 0 must be exactly the first basis vector.
pub fn block_decompose(t: &TruncOp) -> Result<(Complex64, TruncOp), HardyError> {
    let m = t.matrix();
    let n = m.dim();
    if n == 0 {
        return Err(HardyError::NotReducing);
    }
    let one = Complex64::new(1.0, 0.0);
    let reducing = m[(0, 0)] == one && (1..n).all(|i| m[(i, 0)].is_zero() && m[(0, i)].is_zero());
    if !reducing {
        return Err(HardyError::NotReducing);
    }
    Ok((m[(0, 0)], TruncOp::new(m.trailing_block(), t.exactness())))
}

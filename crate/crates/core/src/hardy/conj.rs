use alloc::vec::Vec;

use num_complex::Complex64;

use super::matrix::Matrix;
use super::ops::TruncOp;
use crate::error::HardyError;

/// Conjugate-linear operator `v -> B conj(v)`.
///
/// It is an involution when `B conj(B) = I` and isometric when `B` is
/// unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjLinearOp {
    b: Matrix,
}

impl ConjLinearOp {
    pub fn from_matrix(b: Matrix) -> Self {
        ConjLinearOp { b }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.b
    }

    pub fn order(&self) -> usize {
        self.b.dim()
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let conj: Vec<Complex64> = v.iter().map(Complex64::conj).collect();
        self.b.apply(&conj)
    }

    /// `L ∘ self ∘ R` for linear `L`, `R`: the matrix `L B conj(R)`.
    pub fn sandwich(&self, left: &TruncOp, right: &TruncOp) -> Result<ConjLinearOp, HardyError> {
        let b = left.matrix().mul(&self.b)?.mul(&right.matrix().conj())?;
        Ok(ConjLinearOp { b })
    }

    /// `(v0 -> unit * conj(v0)) ⊕ self`, acting on constants ⊕ `zH^2`.
    pub fn with_leading_scalar(&self, unit: Complex64) -> ConjLinearOp {
        let n = self.b.dim() + 1;
        let b = Matrix::from_fn(n, |i, j| match (i, j) {
            (0, 0) => unit,
            (0, _) | (_, 0) => Complex64::new(0.0, 0.0),
            _ => self.b[(i - 1, j - 1)],
        });
        ConjLinearOp { b }
    }

    /// Leading `k x k` block of `B conj(B) - I`.
    pub fn involution_residual(&self, k: usize) -> Result<f64, HardyError> {
        let sq = self.b.block_product(&self.b.conj(), k)?;
        sq.max_abs_diff(&Matrix::identity(k))
    }

    /// Leading `k x k` block of `B^* B - I`.
    pub fn isometry_residual(&self, k: usize) -> Result<f64, HardyError> {
        let gram = self.b.adjoint().block_product(&self.b, k)?;
        gram.max_abs_diff(&Matrix::identity(k))
    }
}

/// `J f(z) = conj(f(conj z))`, which conjugates every Taylor coefficient.
pub fn conjugation_j(n: usize) -> ConjLinearOp {
    ConjLinearOp::from_matrix(Matrix::identity(n))
}

/// `v -> B_j conj(U v)`, i.e. `B = B_j conj(U)`.
pub fn compose_conjugation(j: &ConjLinearOp, u: &TruncOp) -> Result<ConjLinearOp, HardyError> {
    Ok(ConjLinearOp::from_matrix(j.b.mul(&u.matrix().conj())?))
}

fn check_orders(t: &TruncOp, c: &ConjLinearOp, k: usize) -> Result<(), HardyError> {
    if t.order() != c.order() {
        return Err(HardyError::DimensionMismatch {
            left: t.order(),
            right: c.order(),
        });
    }
    t.matrix().check_block(k)
}

/// Complex-symmetry residual of `T` under `C: v -> B conj(v)`: the leading
/// `k x k` block of `T B - B T^T`. For an involutive `C` this vanishes
/// exactly when `T = C T^* C`.
pub fn symmetry_residual(t: &TruncOp, c: &ConjLinearOp, k: usize) -> Result<f64, HardyError> {
    check_orders(t, c, k)?;
    let tb = t.matrix().block_product(&c.b, k)?;
    let btt = c.b.block_product(&t.matrix().transpose(), k)?;
    tb.max_abs_diff(&btt)
}

/// Leading `k x k` block of `target - C middle C`, where `C middle C` is
/// the linear map `B conj(middle) conj(B)`.
pub fn sandwich_residual(
    target: &TruncOp,
    middle: &TruncOp,
    c: &ConjLinearOp,
    k: usize,
) -> Result<f64, HardyError> {
    check_orders(target, c, k)?;
    check_orders(middle, c, k)?;
    let n = c.order();
    let bc = c.b.conj();
    let mc = middle.matrix().conj();
    // columns j < k of conj(middle) conj(B), then rows i < k of B
    let right: Vec<Vec<Complex64>> = (0..k)
        .map(|j| {
            (0..n)
                .map(|l| (0..n).map(|m| mc[(l, m)] * bc[(m, j)]).sum())
                .collect()
        })
        .collect();
    let mut worst = 0.0f64;
    for i in 0..k {
        let row = c.b.row(i);
        for (j, col) in right.iter().enumerate() {
            let v: Complex64 = row.iter().zip(col).map(|(x, y)| x * y).sum();
            worst = worst.max((target.matrix()[(i, j)] - v).norm());
        }
    }
    Ok(worst)
}

/// The defining form `T - C T^* C` on the leading block.
pub fn symmetry_residual_definitional(
    t: &TruncOp,
    c: &ConjLinearOp,
    k: usize,
) -> Result<f64, HardyError> {
    sandwich_residual(t, &t.adjoint(), c, k)
}

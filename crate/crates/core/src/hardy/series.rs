use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use num_complex::Complex64;
use num_traits::{Float, Zero};

use crate::error::{HardyError, MoebiusError};
use crate::moebius::{AnalyticWeight, Moebius};

/// The first `N` Taylor coefficients of an `H^2` function.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVec(Vec<Complex64>);

impl CoeffVec {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        CoeffVec(coeffs)
    }

    /// `1` truncated to order `n`.
    pub fn unit(n: usize) -> Self {
        let mut v = vec![Complex64::zero(); n];
        if let Some(first) = v.first_mut() {
            *first = Complex64::new(1.0, 0.0);
        }
        CoeffVec(v)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.0
    }

    /// `sqrt(sum |a_n|^2)`.
    pub fn norm(&self) -> f64 {
        Float::sqrt(self.0.iter().map(Complex64::norm_sqr).sum::<f64>())
    }

    /// Product of the two series, truncated to the shorter order.
    pub fn mul_truncated(&self, other: &CoeffVec) -> CoeffVec {
        let n = self.order().min(other.order());
        // trailing zeros of `other` (e.g. affine symbols) shorten the inner loop
        let support = other.0[..n]
            .iter()
            .rposition(|x| !x.is_zero())
            .map_or(0, |p| p + 1);
        let mut out = vec![Complex64::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            let lo = i.saturating_sub(support.saturating_sub(1));
            *slot = (lo..=i).map(|l| self.0[l] * other.0[i - l]).sum();
        }
        CoeffVec(out)
    }
}

impl Index<usize> for CoeffVec {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

/// Series of `(n0 + n1 z) / (d0 + d1 z)` from
/// `(d0 + d1 z) * sum x_n z^n = n0 + n1 z`.
fn linear_fractional_series(
    num: [Complex64; 2],
    den: [Complex64; 2],
    n: usize,
) -> Result<CoeffVec, HardyError> {
    if den[1].norm_sqr() >= den[0].norm_sqr() {
        return Err(MoebiusError::PoleInClosedDisk.into());
    }
    let mut out: Vec<Complex64> = Vec::with_capacity(n);
    for i in 0..n {
        let mut rhs = match i {
            0 => num[0],
            1 => num[1],
            _ => Complex64::zero(),
        };
        if i > 0 {
            rhs -= den[1] * out[i - 1];
        }
        out.push(rhs / den[0]);
    }
    Ok(CoeffVec(out))
}

/// Functions with a closed-form Taylor expansion at the origin.
pub trait TaylorSeries {
    fn taylor_coeffs(&self, n: usize) -> Result<CoeffVec, HardyError>;
}

impl TaylorSeries for Moebius<f64> {
    fn taylor_coeffs(&self, n: usize) -> Result<CoeffVec, HardyError> {
        linear_fractional_series([self.b, self.a], [self.d, self.c], n)
    }
}

impl TaylorSeries for AnalyticWeight<f64> {
    fn taylor_coeffs(&self, n: usize) -> Result<CoeffVec, HardyError> {
        let mut v = linear_fractional_series(self.num, self.den, n)?;
        let s = self.prefactor();
        if s != 1.0 {
            v.0.iter_mut().for_each(|x| *x *= s);
        }
        Ok(v)
    }
}

pub fn taylor_coeffs(f: &impl TaylorSeries, n: usize) -> Result<CoeffVec, HardyError> {
    f.taylor_coeffs(n)
}

/// Reproducing kernel `K_w(z) = 1 / (1 - conj(w) z)`, coefficients
/// `conj(w)^n`.
pub fn kernel_vector(w: Complex64, n: usize) -> CoeffVec {
    let mut v = Vec::with_capacity(n);
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        v.push(p);
        p *= w.conj();
    }
    CoeffVec(v)
}

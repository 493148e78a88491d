//! Real scalar types usable as coefficients of linear-fractional maps.
//!
//! Both `f64` and exact rationals implement [`Real`]; complex coefficients
//! are `Complex<T>` for either.

use core::fmt::Debug;
use core::ops::Neg;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, Num, Signed};

/// Absolute slack used by floating-point disk containment tests.
pub const F64_CONTAINMENT_SLACK: f64 = 1e-12;

pub trait Real: Clone + Debug + PartialOrd + Num + Neg<Output = Self> {
    /// Decides `sqrt(p) + sqrt(q) <= bound` for nonnegative `p` and `q`.
    fn root_sum_le(p: &Self, q: &Self, bound: &Self) -> bool;

    fn from_i64(n: i64) -> Self;

    fn to_f64(&self) -> f64;
}

impl Real for f64 {
    fn root_sum_le(p: &f64, q: &f64, bound: &f64) -> bool {
        Float::sqrt(*p) + Float::sqrt(*q) <= *bound + F64_CONTAINMENT_SLACK
    }

    fn from_i64(n: i64) -> f64 {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Real for BigRational {
    fn root_sum_le(p: &Self, q: &Self, bound: &Self) -> bool {
        // sqrt(p) + sqrt(q) <= d  <=>  sqrt(q) <= d, r = d^2 + q - p >= 0, 4 d^2 q <= r^2
        let d = bound;
        if d.is_negative() {
            return false;
        }
        let d2 = d * d;
        if *q > d2 {
            return false;
        }
        let r = &d2 + q - p;
        if r.is_negative() {
            return false;
        }
        BigRational::from_integer(4.into()) * &d2 * q <= &r * &r
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

pub(crate) fn norm_sqr<T: Real>(z: &Complex<T>) -> T {
    z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone()
}

pub(crate) fn to_c64<T: Real>(z: &Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

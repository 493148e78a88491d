//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! Rational functions may carry one power of a real quadratic surd
//! `s = sqrt(r)`, reduced with `s^2 = r`, so that weights such as
//! `sqrt(1 - b^2) / (1 - bz)` can be multiplied without rounding.

mod chain;
mod poly;
mod ratfunc;

pub use chain::{
    closed_form_factors, symbol_chain, verify_symbol_chain, verify_weight_product,
    verify_weight_product_with, weight_factors, weight_product, zeta_ratfunc, WeightFactors,
};
pub use poly::GRatPoly;
pub use ratfunc::{GRatRatFunc, RatOp};

use num_complex::Complex;
use num_rational::BigRational;

/// Exact rational.
pub type Rational = BigRational;

/// Exact Gaussian rational.
pub type GRat = Complex<BigRational>;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

pub fn grat(re: Rational, im: Rational) -> GRat {
    Complex::new(re, im)
}

/// A real Gaussian rational `n / d`.
pub fn grat_real(n: i64, d: i64) -> GRat {
    Complex::new(rational(n, d), rational(0, 1))
}

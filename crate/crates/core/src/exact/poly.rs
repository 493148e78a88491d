use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::GRat;

/// Polynomial with Gaussian-rational coefficients, lowest degree first.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GRatPoly {
    coeffs: Vec<GRat>,
}

impl GRatPoly {
    pub fn new(mut coeffs: Vec<GRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        GRatPoly { coeffs }
    }

    pub fn zero() -> Self {
        GRatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GRat::one())
    }

    pub fn constant(c: GRat) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1 z`.
    pub fn linear(c0: GRat, c1: GRat) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[GRat] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn conj(&self) -> Self {
        GRatPoly {
            coeffs: self.coeffs.iter().map(GRat::conj).collect(),
        }
    }

    pub fn scale(&self, c: &GRat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, z: &GRat) -> GRat {
        self.coeffs
            .iter()
            .rev()
            .fold(GRat::zero(), |acc, c| acc * z + c)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &GRatPoly {
    type Output = GRatPoly;

    fn add(self, rhs: &GRatPoly) -> GRatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = GRat::zero();
        GRatPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &GRatPoly {
    type Output = GRatPoly;

    fn neg(self) -> GRatPoly {
        GRatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &GRatPoly {
    type Output = GRatPoly;

    fn sub(self, rhs: &GRatPoly) -> GRatPoly {
        self + &(-rhs)
    }
}

impl Mul for &GRatPoly {
    type Output = GRatPoly;

    fn mul(self, rhs: &GRatPoly) -> GRatPoly {
        if self.is_zero() || rhs.is_zero() {
            return GRatPoly::zero();
        }
        let mut out = vec![GRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + x * y;
            }
        }
        GRatPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GRatPoly {
            type Output = GRatPoly;

            fn $m(self, rhs: GRatPoly) -> GRatPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GRatPoly {
    type Output = GRatPoly;

    fn neg(self) -> GRatPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{grat_real, rational};
    use proptest::prelude::*;

    fn poly(cs: &[(i64, i64)]) -> GRatPoly {
        GRatPoly::new(cs.iter().map(|&(n, d)| grat_real(n, d)).collect())
    }

    fn arb_grat() -> impl Strategy<Value = GRat> {
        (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6)
            .prop_map(|(a, b, c, d)| GRat::new(rational(a, b), rational(c, d)))
    }

    fn arb_poly() -> impl Strategy<Value = GRatPoly> {
        prop::collection::vec(arb_grat(), 0..5).prop_map(GRatPoly::new)
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(poly(&[(0, 1)]).degree(), None);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let b = rational(1, 3);
        let minus_b = GRat::new(-b.clone(), rational(0, 1));
        let plus_b = GRat::new(b, rational(0, 1));
        let one = GRat::one();
        let lhs = &GRatPoly::linear(one.clone(), minus_b) * &GRatPoly::linear(one, plus_b);
        assert_eq!(lhs, poly(&[(1, 1), (0, 1), (-1, 9)]));
    }

    #[test]
    fn eval_and_pow() {
        let p = poly(&[(1, 1), (1, 2)]);
        assert_eq!(p.pow(3).eval(&grat_real(2, 1)), grat_real(8, 1));
        assert_eq!(p.pow(0), GRatPoly::one());
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p + &(-&p)).is_zero());
        }

        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), z in arb_grat()) {
            prop_assert_eq!((&p * &q).eval(&z), p.eval(&z) * q.eval(&z));
            prop_assert_eq!((&p + &q).eval(&z), p.eval(&z) + q.eval(&z));
        }
    }
}

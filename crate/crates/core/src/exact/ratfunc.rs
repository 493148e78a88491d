use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{GRat, GRatPoly, Rational};
use crate::error::ExactError;
use crate::moebius::{AnalyticWeight, Moebius};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Mul,
    Div,
}

/// `s^p * num / den` with `p` in `{0, 1}` and `s = sqrt(surd_square)`.
///
/// Products fold `s^2` into the numerator and quotients rewrite `1/s` as
/// `s / s^2`, so the power never leaves `{0, 1}` and equality reduces to
/// a polynomial identity.
#[derive(Debug, Clone, PartialEq)]
pub struct GRatRatFunc {
    num: GRatPoly,
    den: GRatPoly,
    surd_power: i32,
    surd_square: Option<Rational>,
}

impl GRatRatFunc {
    pub fn new(num: GRatPoly, den: GRatPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(GRatRatFunc {
            num,
            den,
            surd_power: 0,
            surd_square: None,
        })
    }

    /// `sqrt(surd_square) * num / den`.
    pub fn with_surd(
        num: GRatPoly,
        den: GRatPoly,
        surd_square: Rational,
    ) -> Result<Self, ExactError> {
        if !surd_square.is_positive() {
            return Err(ExactError::BadSurd);
        }
        let mut f = Self::new(num, den)?;
        f.surd_power = 1;
        f.surd_square = Some(surd_square);
        Ok(f)
    }

    pub fn constant(c: GRat) -> Self {
        GRatRatFunc {
            num: GRatPoly::constant(c),
            den: GRatPoly::one(),
            surd_power: 0,
            surd_square: None,
        }
    }

    pub fn one() -> Self {
        Self::constant(GRat::one())
    }

    pub fn polynomial(p: GRatPoly) -> Self {
        GRatRatFunc {
            num: p,
            den: GRatPoly::one(),
            surd_power: 0,
            surd_square: None,
        }
    }

    /// The map `(az + b)/(cz + d)` as a rational function of `z`.
    pub fn from_moebius(m: &Moebius<Rational>) -> Self {
        GRatRatFunc {
            num: GRatPoly::linear(m.b.clone(), m.a.clone()),
            den: GRatPoly::linear(m.d.clone(), m.c.clone()),
            surd_power: 0,
            surd_square: None,
        }
    }

    pub fn from_weight(w: &AnalyticWeight<Rational>) -> Result<Self, ExactError> {
        let num = GRatPoly::linear(w.num[0].clone(), w.num[1].clone());
        let den = GRatPoly::linear(w.den[0].clone(), w.den[1].clone());
        match &w.surd_square {
            Some(r) => Self::with_surd(num, den, r.clone()),
            None => Self::new(num, den),
        }
    }

    pub fn numerator(&self) -> &GRatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &GRatPoly {
        &self.den
    }

    pub fn surd_power(&self) -> i32 {
        self.surd_power
    }

    pub fn surd_square(&self) -> Option<&Rational> {
        self.surd_square.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn shared_surd(&self, other: &Self) -> Result<Option<Rational>, ExactError> {
        match (&self.surd_square, &other.surd_square) {
            (Some(x), Some(y)) if x != y => Err(ExactError::SurdMismatch),
            (Some(x), _) | (None, Some(x)) => Ok(Some(x.clone())),
            (None, None) => Ok(None),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.surd_power != other.surd_power {
            return Err(ExactError::SurdMismatch);
        }
        let surd_square = self.shared_surd(other)?;
        Ok(GRatRatFunc {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
            surd_power: self.surd_power,
            surd_square,
        })
    }

    pub fn neg(&self) -> Self {
        GRatRatFunc {
            num: -&self.num,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        let surd_square = self.shared_surd(other)?;
        let mut num = &self.num * &other.num;
        let den = &self.den * &other.den;
        let mut surd_power = self.surd_power + other.surd_power;
        if surd_power == 2 {
            let r = surd_square.clone().ok_or(ExactError::BadSurd)?;
            num = num.scale(&GRat::new(r, Rational::zero()));
            surd_power = 0;
        }
        Ok(GRatRatFunc {
            num,
            den,
            surd_power,
            surd_square: if surd_power == 0 { None } else { surd_square },
        })
    }

    /// Multiplicative inverse; `1/s` is rewritten as `s / s^2`.
    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let mut inv = GRatRatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
            surd_power: self.surd_power,
            surd_square: self.surd_square.clone(),
        };
        if let Some(r) = &self.surd_square {
            inv.den = inv.den.scale(&GRat::new(r.clone(), Rational::zero()));
        }
        Ok(inv)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        self.mul(&other.recip()?)
    }

    pub fn arith(&self, other: &Self, op: RatOp) -> Result<Self, ExactError> {
        match op {
            RatOp::Add => self.add(other),
            RatOp::Mul => self.mul(other),
            RatOp::Div => self.div(other),
        }
    }

    /// Exact equality: `num(x) den(y) - num(y) den(x) = 0`. Comparing a
    /// surd-free function with one carrying `s` is an error, since `s` may
    /// itself be rational.
    pub fn equals(&self, other: &Self) -> Result<bool, ExactError> {
        if self.surd_power != other.surd_power {
            return Err(ExactError::SurdMismatch);
        }
        self.shared_surd(other)?;
        Ok((&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero())
    }

    /// `z -> conj(f(conj z))`: conjugates every coefficient. The surd is
    /// real and unchanged.
    pub fn conj(&self) -> Self {
        GRatRatFunc {
            num: self.num.conj(),
            den: self.den.conj(),
            surd_power: self.surd_power,
            surd_square: self.surd_square.clone(),
        }
    }

    /// `f ∘ m`. With `k = max(deg num, deg den)` both polynomials are
    /// homogenized as `sum p_i (az + b)^i (cz + d)^(k - i)`, which clears the
    /// common `(cz + d)^k`.
    pub fn substitute(&self, m: &Moebius<Rational>) -> Result<Self, ExactError> {
        let k = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let upper = GRatPoly::linear(m.b.clone(), m.a.clone());
        let lower = GRatPoly::linear(m.d.clone(), m.c.clone());
        let upper_pows: Vec<GRatPoly> = (0..=k).map(|i| upper.pow(i)).collect();
        let lower_pows: Vec<GRatPoly> = (0..=k).map(|i| lower.pow(i)).collect();
        let homogenize = |p: &GRatPoly| {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(GRatPoly::zero(), |acc, (i, c)| {
                    &acc + &(&upper_pows[i] * &lower_pows[k - i]).scale(c)
                })
        };
        let den = homogenize(&self.den);
        if den.is_zero() {
            return Err(ExactError::DegenerateSubstitution);
        }
        Ok(GRatRatFunc {
            num: homogenize(&self.num),
            den,
            surd_power: self.surd_power,
            surd_square: self.surd_square.clone(),
        })
    }

    /// Value at `z`, as `(surd power, rational part)`; `None` at a pole.
    pub fn eval(&self, z: &GRat) -> Option<(i32, GRat)> {
        let den = self.den.eval(z);
        if den.is_zero() {
            return None;
        }
        Some((self.surd_power, self.num.eval(z) / den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{grat, grat_real, rational};
    use crate::moebius::{adjoint_phi_psi_family, tau_zeta, SymbolParams};
    use alloc::vec;
    use proptest::prelude::*;

    fn lin(c0: GRat, c1: GRat) -> GRatPoly {
        GRatPoly::linear(c0, c1)
    }

    fn one_minus(b: &Rational) -> GRatPoly {
        lin(GRat::one(), GRat::new(-b.clone(), Rational::zero()))
    }

    #[test]
    fn field_inverse() {
        let x = GRatRatFunc::polynomial(one_minus(&rational(1, 3)));
        let prod = x.mul(&x.recip().unwrap()).unwrap();
        assert!(prod.equals(&GRatRatFunc::one()).unwrap());
        let inv = GRatRatFunc::new(GRatPoly::one(), one_minus(&rational(1, 2))).unwrap();
        let back = inv
            .mul(&GRatRatFunc::polynomial(one_minus(&rational(1, 2))))
            .unwrap();
        assert!(back.equals(&GRatRatFunc::one()).unwrap());
    }

    #[test]
    fn surd_squares_fold() {
        let r = rational(8, 9);
        let s_r = GRatRatFunc::with_surd(
            GRatPoly::constant(grat_real(2, 1)),
            GRatPoly::one(),
            r.clone(),
        )
        .unwrap();
        let s_q = GRatRatFunc::with_surd(
            lin(GRat::one(), grat_real(1, 1)),
            GRatPoly::one(),
            r.clone(),
        )
        .unwrap();
        let prod = s_r.mul(&s_q).unwrap();
        assert_eq!(prod.surd_power(), 0);
        let expected = GRatRatFunc::polynomial(lin(grat_real(16, 9), grat_real(16, 9)));
        assert!(prod.equals(&expected).unwrap());
    }

    #[test]
    fn reciprocal_surd_is_canonical() {
        // 1/s and s/r are the same function
        let r = rational(3, 4);
        let s = GRatRatFunc::with_surd(GRatPoly::one(), GRatPoly::one(), r.clone()).unwrap();
        let inv = s.recip().unwrap();
        let other = GRatRatFunc::with_surd(
            GRatPoly::one(),
            GRatPoly::constant(GRat::new(r, Rational::zero())),
            rational(3, 4),
        )
        .unwrap();
        assert!(inv.equals(&other).unwrap());
        assert!(s.mul(&inv).unwrap().equals(&GRatRatFunc::one()).unwrap());
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            GRatRatFunc::new(GRatPoly::one(), GRatPoly::zero()),
            Err(ExactError::ZeroDenominator)
        );
        let zero = GRatRatFunc::constant(GRat::zero());
        assert_eq!(
            GRatRatFunc::one().div(&zero),
            Err(ExactError::DivisionByZero)
        );
        let s = GRatRatFunc::with_surd(GRatPoly::one(), GRatPoly::one(), rational(1, 2)).unwrap();
        assert_eq!(s.add(&GRatRatFunc::one()), Err(ExactError::SurdMismatch));
        assert_eq!(s.equals(&GRatRatFunc::one()), Err(ExactError::SurdMismatch));
        let t = GRatRatFunc::with_surd(GRatPoly::one(), GRatPoly::one(), rational(1, 3)).unwrap();
        assert_eq!(s.mul(&t), Err(ExactError::SurdMismatch));
        assert_eq!(
            GRatRatFunc::with_surd(GRatPoly::one(), GRatPoly::one(), rational(-1, 3)),
            Err(ExactError::BadSurd)
        );
    }

    #[test]
    fn equality_examples() {
        let b = rational(1, 2);
        let b2 = &b * &b;
        let lhs = GRatRatFunc::new(
            GRatPoly::new(vec![
                GRat::one(),
                GRat::zero(),
                GRat::new(-b2, Rational::zero()),
            ]),
            one_minus(&b),
        )
        .unwrap();
        let rhs = GRatRatFunc::polynomial(lin(GRat::one(), GRat::new(b.clone(), Rational::zero())));
        assert!(lhs.equals(&rhs).unwrap());

        let f = GRatRatFunc::new(GRatPoly::one(), one_minus(&b)).unwrap();
        let g = GRatRatFunc::new(GRatPoly::one(), one_minus(&-b)).unwrap();
        assert!(!f.equals(&g).unwrap());
    }

    #[test]
    fn substitute_identity_is_noop() {
        let f = GRatRatFunc::new(
            lin(grat_real(1, 2), grat_real(3, 1)),
            one_minus(&rational(1, 5)),
        )
        .unwrap();
        assert!(f
            .substitute(&Moebius::identity())
            .unwrap()
            .equals(&f)
            .unwrap());
    }

    #[test]
    fn psi_after_tau_matches_closed_form() {
        // (1 - bz)/(1 - b^2 + a b^2 - a b z), real a
        let (a, b) = (rational(1, 2), rational(1, 3));
        let p = SymbolParams::new(
            GRat::new(a.clone(), Rational::zero()),
            GRat::new(b.clone(), Rational::zero()),
        )
        .unwrap();
        let (_, psi) = adjoint_phi_psi_family(&p);
        let (tau, _) = tau_zeta(b.clone()).unwrap();
        let got = GRatRatFunc::from_weight(&psi)
            .unwrap()
            .substitute(&tau)
            .unwrap();
        let b2 = &b * &b;
        let den0 = Rational::one() - &b2 + &a * &b2;
        let expected = GRatRatFunc::new(
            one_minus(&b),
            lin(
                GRat::new(den0, Rational::zero()),
                GRat::new(-(&a * &b), Rational::zero()),
            ),
        )
        .unwrap();
        assert!(got.equals(&expected).unwrap());
    }

    #[test]
    fn degenerate_substitution() {
        // 1/z composed with the constant 0
        let f = GRatRatFunc::new(GRatPoly::one(), lin(GRat::zero(), GRat::one())).unwrap();
        let zero = Moebius::constant(GRat::zero());
        assert_eq!(f.substitute(&zero), Err(ExactError::DegenerateSubstitution));
    }

    fn arb_grat() -> impl Strategy<Value = GRat> {
        (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5)
            .prop_map(|(a, b, c, d)| grat(rational(a, b), rational(c, d)))
    }

    fn arb_ratfunc() -> impl Strategy<Value = GRatRatFunc> {
        (
            prop::collection::vec(arb_grat(), 0..3),
            prop::collection::vec(arb_grat(), 1..3),
            arb_grat(),
        )
            .prop_map(|(n, mut d, lead)| {
                d.push(if lead.is_zero() { GRat::one() } else { lead });
                GRatRatFunc::new(GRatPoly::new(n), GRatPoly::new(d)).unwrap()
            })
    }

    proptest! {
        #[test]
        fn equality_is_an_equivalence(x in arb_ratfunc(), y in arb_ratfunc(), k in arb_grat()) {
            prop_assert!(x.equals(&x).unwrap());
            prop_assert_eq!(x.equals(&y).unwrap(), y.equals(&x).unwrap());
            // x ~ x*(k/k) ~ (x*(k/k))*(1 + 0)
            let k = if k.is_zero() { GRat::one() } else { k };
            let kk = GRatRatFunc::new(GRatPoly::constant(k.clone()), GRatPoly::constant(k)).unwrap();
            let x2 = x.mul(&kk).unwrap();
            let x3 = x2.add(&GRatRatFunc::constant(GRat::zero())).unwrap();
            prop_assert!(x.equals(&x2).unwrap() && x2.equals(&x3).unwrap() && x.equals(&x3).unwrap());
        }

        #[test]
        fn field_operations_agree_with_evaluation(x in arb_ratfunc(), y in arb_ratfunc(), z in arb_grat()) {
            let (Some((_, xv)), Some((_, yv))) = (x.eval(&z), y.eval(&z)) else { return Ok(()); };
            let sum = x.add(&y).unwrap();
            let prod = x.mul(&y).unwrap();
            prop_assert_eq!(sum.eval(&z).unwrap().1, &xv + &yv);
            prop_assert_eq!(prod.eval(&z).unwrap().1, &xv * &yv);
            if !y.is_zero() && !yv.is_zero() {
                prop_assert_eq!(x.div(&y).unwrap().eval(&z).unwrap().1, xv / yv);
            }
        }
    }
}

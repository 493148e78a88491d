//! Exact checks of the conjugation identity
//! `C_sigma = (J T_zeta C_tau) T_psi C_phi (J T_zeta C_tau)` for real `b`:
//! the composed symbol must equal `sigma` and the three weight factors
//! must multiply to 1.

use num_traits::{One, Zero};

use super::{GRat, GRatPoly, GRatRatFunc, Rational};
use crate::error::ExactError;
use crate::moebius::{adjoint_phi_psi_family, sigma_family, tau_zeta, Moebius, SymbolParams};

fn real_b(p: &SymbolParams<Rational>) -> Result<Rational, ExactError> {
    if !p.b().im.is_zero() {
        return Err(ExactError::NonRealParameter);
    }
    Ok(p.b().re.clone())
}

fn real(x: Rational) -> GRat {
    GRat::new(x, Rational::zero())
}

/// `tau ∘ reflect_conj(phi) ∘ tau`, with `phi` from the adjoint-side family.
pub fn symbol_chain(p: &SymbolParams<Rational>) -> Result<Moebius<Rational>, ExactError> {
    let (tau, _) = tau_zeta(real_b(p)?)?;
    let (phi, _) = adjoint_phi_psi_family(p);
    Ok(tau.compose(&phi.reflect_conj().compose(&tau)?)?)
}

pub fn verify_symbol_chain(p: &SymbolParams<Rational>) -> Result<bool, ExactError> {
    Ok(symbol_chain(p)?.same_map(&sigma_family(p)))
}

/// `zeta(z) = sqrt(1 - b^2) / (1 - bz)` with the square root kept symbolic.
pub fn zeta_ratfunc(b: &Rational) -> Result<GRatRatFunc, ExactError> {
    let (_, zeta) = tau_zeta(b.clone())?;
    GRatRatFunc::from_weight(&zeta)
}

/// The intermediate functions of the identity, each as a function of `z`.
#[derive(Debug, Clone)]
pub struct WeightFactors {
    /// `conj(phi(tau(conj z)))`.
    pub reflected_phi_tau: GRatRatFunc,
    /// `conj(zeta(conj z))`.
    pub outer_zeta: GRatRatFunc,
    /// `conj(psi(tau(conj z)))`.
    pub conj_psi_tau: GRatRatFunc,
    /// `zeta(conj(phi(tau(conj z))))`.
    pub zeta_conj_phi_tau: GRatRatFunc,
}

impl WeightFactors {
    pub fn product(&self) -> Result<GRatRatFunc, ExactError> {
        self.outer_zeta
            .mul(&self.conj_psi_tau)?
            .mul(&self.zeta_conj_phi_tau)
    }
}

/// Builds the factors by substitution, using `zeta` as the conjugation
/// weight (normally [`zeta_ratfunc`]).
fn factors_with(
    p: &SymbolParams<Rational>,
    zeta: &GRatRatFunc,
) -> Result<WeightFactors, ExactError> {
    let (tau, _) = tau_zeta(real_b(p)?)?;
    let (phi, psi) = adjoint_phi_psi_family(p);
    let reflected = phi.compose(&tau)?.reflect_conj();
    Ok(WeightFactors {
        reflected_phi_tau: GRatRatFunc::from_moebius(&reflected),
        outer_zeta: zeta.conj(),
        conj_psi_tau: GRatRatFunc::from_weight(&psi)?.substitute(&tau)?.conj(),
        zeta_conj_phi_tau: zeta.substitute(&reflected)?,
    })
}

pub fn weight_factors(p: &SymbolParams<Rational>) -> Result<WeightFactors, ExactError> {
    factors_with(p, &zeta_ratfunc(&real_b(p)?)?)
}

pub fn weight_product(p: &SymbolParams<Rational>) -> Result<GRatRatFunc, ExactError> {
    weight_factors(p)?.product()
}

pub fn verify_weight_product(p: &SymbolParams<Rational>) -> Result<bool, ExactError> {
    weight_product(p)?.equals(&GRatRatFunc::one())
}

/// As [`verify_weight_product`] with a replacement conjugation weight.
pub fn verify_weight_product_with(
    p: &SymbolParams<Rational>,
    zeta: &GRatRatFunc,
) -> Result<bool, ExactError> {
    factors_with(p, zeta)?
        .product()?
        .equals(&GRatRatFunc::one())
}

/// The simplified forms of the factors, written directly from `a` and `b`
/// with `D(z) = 1 - b^2 + ab^2 - abz`:
/// `(ab - az)/D`, `s/(1 - bz)`, `(1 - bz)/D` and `D/s`.
pub fn closed_form_factors(p: &SymbolParams<Rational>) -> Result<WeightFactors, ExactError> {
    let b = real_b(p)?;
    let a = p.a().clone();
    let bg = real(b.clone());
    let b2 = real(&b * &b);
    let one = GRat::one();
    let surd = &Rational::one() - &b * &b;

    let d = GRatPoly::linear(&one - &b2 + &a * &b2, -(&a * &bg));
    let one_minus_bz = GRatPoly::linear(one.clone(), -bg.clone());
    Ok(WeightFactors {
        reflected_phi_tau: GRatRatFunc::new(GRatPoly::linear(&a * &bg, -a.clone()), d.clone())?,
        outer_zeta: GRatRatFunc::with_surd(GRatPoly::one(), one_minus_bz.clone(), surd.clone())?,
        conj_psi_tau: GRatRatFunc::new(one_minus_bz, d.clone())?,
        // D/s = s D / s^2
        zeta_conj_phi_tau: GRatRatFunc::with_surd(d, GRatPoly::constant(real(surd.clone())), surd)?,
    })
}

use h2sym_core::exact::{
    closed_form_factors, grat_real, verify_symbol_chain, verify_weight_product,
    verify_weight_product_with, weight_factors, zeta_ratfunc, GRat, GRatPoly, GRatRatFunc,
};
use h2sym_core::hardy::{
    compose_conjugation, composition_matrix, conjugation_j, kernel_vector, rotation_unitary,
    sandwich_residual, symmetry_residual, symmetry_residual_definitional, taylor_coeffs,
    toeplitz_matrix, weighted_comp_matrix, ConjLinearOp, TruncOp,
};
use h2sym_core::moebius::{adjoint_phi_psi_family, phi_psi_family, sigma_family, tau_zeta};
use h2sym_core::{ExactError, HardyError, Moebius, MoebiusError, SymbolParams};
use num_complex::Complex64;
use num_traits::One;
use serde::Serialize;

use super::sampling::{FixedConfig, SampleParams};
use super::{Check, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricClass {
    /// Every value at most the exact tolerance.
    Exact,
    /// Every value at most the realness tolerance.
    Real,
    /// Decreasing in `N` down to the roundoff floor, last value at most the
    /// convergence tolerance.
    Convergence,
    /// Exact identity; true or false.
    Symbolic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MetricValues {
    /// `(N, residual)` in ascending `N`.
    Residuals(Vec<(usize, f64)>),
    Symbolic(bool),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metric {
    pub name: &'static str,
    pub class: MetricClass,
    pub values: MetricValues,
}

impl Metric {
    fn residuals(name: &'static str, class: MetricClass, values: Vec<(usize, f64)>) -> Metric {
        Metric {
            name,
            class,
            values: MetricValues::Residuals(values),
        }
    }

    fn symbolic(name: &'static str, holds: bool) -> Metric {
        Metric {
            name,
            class: MetricClass::Symbolic,
            values: MetricValues::Symbolic(holds),
        }
    }

    /// The residual the verdict is judged on: the largest-`N` value for
    /// convergence metrics, the worst value otherwise. `None` for symbolic.
    pub fn headline(&self) -> Option<f64> {
        match &self.values {
            MetricValues::Symbolic(_) => None,
            MetricValues::Residuals(v) if self.class == MetricClass::Convergence => {
                v.last().map(|&(_, r)| r)
            }
            MetricValues::Residuals(v) => Some(v.iter().map(|&(_, r)| r).fold(0.0, nan_max)),
        }
    }

    pub fn passes(&self, tol: &Tolerances) -> bool {
        match (&self.values, self.class) {
            (MetricValues::Symbolic(holds), _) => *holds,
            (MetricValues::Residuals(v), MetricClass::Exact) => {
                v.iter().all(|&(_, r)| r <= tol.exact)
            }
            (MetricValues::Residuals(v), MetricClass::Real) => {
                v.iter().all(|&(_, r)| r <= tol.real)
            }
            (MetricValues::Residuals(v), _) => {
                let decreasing = v
                    .windows(2)
                    .all(|w| w[1].1 < w[0].1 || (w[0].1 <= tol.exact && w[1].1 <= tol.exact));
                decreasing && v.last().is_some_and(|&(_, r)| r <= tol.convergence)
            }
        }
    }

    /// How far past its tolerance the metric is; infinite for a false
    /// symbolic identity.
    pub fn severity(&self, tol: &Tolerances) -> f64 {
        let scale = match self.class {
            MetricClass::Exact => tol.exact,
            MetricClass::Real => tol.real,
            MetricClass::Convergence => tol.convergence,
            MetricClass::Symbolic => {
                return if self.passes(tol) { 0.0 } else { f64::INFINITY };
            }
        };
        self.headline()
            .map_or(0.0, |r| if r.is_nan() { f64::INFINITY } else { r / scale })
    }

    /// A failure that cannot be mistaken for roundoff: false, or a residual
    /// above the control margin.
    pub fn fails_clearly(&self, tol: &Tolerances) -> bool {
        !self.passes(tol)
            && match self.class {
                MetricClass::Symbolic => true,
                _ => self
                    .headline()
                    .is_some_and(|r| r.is_nan() || r > tol.control_margin),
            }
    }
}

fn nan_max(acc: f64, x: f64) -> f64 {
    if x.is_nan() || acc.is_nan() {
        f64::NAN
    } else {
        acc.max(x)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Hardy(#[from] HardyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Symbol(#[from] MoebiusError),
    #[error("sampler produced parameters of the wrong kind for this check")]
    WrongParams,
}

type CheckResult = Result<Vec<Metric>, CheckError>;

/// `T_zeta C_tau` at real `b`.
fn tau_zeta_op(b: f64, n: usize) -> Result<TruncOp, CheckError> {
    let (tau, zeta) = tau_zeta(b)?;
    Ok(weighted_comp_matrix(&zeta, &tau, n)?)
}

/// `J T_zeta C_tau` at real `b`.
fn conjugation_at(b: f64, n: usize) -> Result<ConjLinearOp, CheckError> {
    Ok(compose_conjugation(&conjugation_j(n), &tau_zeta_op(b, n)?)?)
}

/// The conjugation for complex `b = b1 e^{i theta}`:
/// `U_{-theta} (J T_zeta C_tau at b1) U_theta`.
fn rotated_conjugation(b: Complex64, n: usize) -> Result<ConjLinearOp, CheckError> {
    let (b1, theta) = b.to_polar();
    let base = conjugation_at(b1, n)?;
    Ok(base.sandwich(&rotation_unitary(-theta, n), &rotation_unitary(theta, n))?)
}

fn per_size(
    sizes: &[usize],
    mut f: impl FnMut(usize) -> Result<f64, CheckError>,
) -> Result<Vec<(usize, f64)>, CheckError> {
    sizes.iter().map(|&n| Ok((n, f(n)?))).collect()
}

fn symbol(params: &SampleParams) -> Result<&SymbolParams, CheckError> {
    match params {
        SampleParams::Symbol(p) => Ok(p),
        SampleParams::Rotated { params, .. } => Ok(params),
        _ => Err(CheckError::WrongParams),
    }
}

fn adjoint_side(p: &SymbolParams, n: usize) -> Result<TruncOp, CheckError> {
    let (phi, psi) = adjoint_phi_psi_family(p);
    Ok(weighted_comp_matrix(&psi, &phi, n)?)
}

fn cowen_adjoint(m: &Moebius, n: usize) -> CheckResult {
    let k = m.krein_adjoint()?;
    let lhs = composition_matrix(m, n)?.adjoint();
    let rhs = weighted_comp_matrix(&k.g, &k.phi, n)?.mul(&toeplitz_matrix(&k.h, n)?.adjoint())?;
    let r = lhs.matrix().max_abs_diff(rhs.matrix())?;
    Ok(vec![Metric::residuals(
        "adjoint-factorization",
        MetricClass::Exact,
        vec![(n, r)],
    )])
}

fn conjugation_product(b: f64, sizes: &[usize], k: usize) -> CheckResult {
    let mut commutation = Vec::new();
    let mut linearity = Vec::new();
    let mut isometry = Vec::new();
    let mut involution = Vec::new();
    for &n in sizes {
        let u = tau_zeta_op(b, n)?;
        // J U = U J exactly when U has real entries
        commutation.push((n, u.matrix().max_abs_diff(&u.matrix().conj())?));
        let c = compose_conjugation(&conjugation_j(n), &u)?;
        let lambda = Complex64::new(0.6, 0.8);
        let v: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new(1.0, i as f64).unscale((i + 1) as f64 * (i + 1) as f64))
            .collect();
        let scaled: Vec<Complex64> = v.iter().map(|x| lambda * x).collect();
        let lhs = c.apply(&scaled);
        let rhs = c.apply(&v);
        let r = lhs
            .iter()
            .zip(&rhs)
            .map(|(x, y)| (x - lambda.conj() * y).norm())
            .fold(0.0, f64::max);
        linearity.push((n, r));
        isometry.push((n, c.isometry_residual(k)?));
        involution.push((n, c.involution_residual(k)?));
    }
    Ok(vec![
        Metric::residuals("commutation", MetricClass::Exact, commutation),
        Metric::residuals("conjugate-linear", MetricClass::Exact, linearity),
        Metric::residuals("isometry", MetricClass::Convergence, isometry),
        Metric::residuals("involution", MetricClass::Convergence, involution),
    ])
}

fn real_commutation(p: &SymbolParams, n: usize) -> CheckResult {
    let (phi, psi) = phi_psi_family(p);
    let (phi_adj, psi_adj) = adjoint_phi_psi_family(p);
    let (tau, zeta) = tau_zeta(p.b().re)?;
    let ops = [
        composition_matrix(&sigma_family(p), n)?,
        composition_matrix(&phi, n)?,
        toeplitz_matrix(&psi, n)?,
        weighted_comp_matrix(&psi, &phi, n)?,
        weighted_comp_matrix(&psi_adj, &phi_adj, n)?,
        toeplitz_matrix(&zeta, n)?,
        composition_matrix(&tau, n)?,
        weighted_comp_matrix(&zeta, &tau, n)?,
    ];
    let r = ops
        .iter()
        .map(|t| t.matrix().max_imag())
        .fold(0.0, f64::max);
    Ok(vec![Metric::residuals(
        "max-imaginary",
        MetricClass::Real,
        vec![(n, r)],
    )])
}

fn unitary_involution(b: f64, sizes: &[usize], k: usize) -> CheckResult {
    let (tau, zeta) = tau_zeta(b)?;
    let w = tau
        .eval(&Complex64::new(0.0, 0.0))
        .ok_or(MoebiusError::PoleInClosedDisk)?;
    let mut hermitian = Vec::new();
    let mut unitary = Vec::new();
    let mut involution = Vec::new();
    let mut kernel = Vec::new();
    for &n in sizes {
        let u = weighted_comp_matrix(&zeta, &tau, n)?;
        hermitian.push((n, u.hermitian_residual()));
        unitary.push((n, u.unitarity_residual(k)?));
        involution.push((n, u.involution_residual(k)?));
        // zeta is the normalized reproducing kernel at tau(0)
        let z = taylor_coeffs(&zeta, n)?;
        let kv = kernel_vector(w, n);
        let scale = (1.0 - b * b).sqrt();
        let r = z
            .as_slice()
            .iter()
            .zip(kv.as_slice())
            .map(|(x, y)| (x - y * scale).norm())
            .fold(0.0, f64::max);
        kernel.push((n, r));
    }
    Ok(vec![
        Metric::residuals("self-adjoint", MetricClass::Exact, hermitian),
        Metric::residuals("normalized-kernel", MetricClass::Exact, kernel),
        Metric::residuals("unitarity", MetricClass::Convergence, unitary),
        Metric::residuals("involution", MetricClass::Convergence, involution),
    ])
}

fn adjoint_family(p: &SymbolParams, n: usize) -> CheckResult {
    let lhs = composition_matrix(&sigma_family(p), n)?.adjoint();
    let r = lhs.matrix().max_abs_diff(adjoint_side(p, n)?.matrix())?;
    Ok(vec![Metric::residuals(
        "adjoint-identity",
        MetricClass::Exact,
        vec![(n, r)],
    )])
}

fn symbolic(p: &SymbolParams<h2sym_core::exact::Rational>) -> CheckResult {
    let factors = weight_factors(p)?;
    let closed = closed_form_factors(p)?;
    let closed_ok = factors
        .reflected_phi_tau
        .equals(&closed.reflected_phi_tau)?
        && factors.outer_zeta.equals(&closed.outer_zeta)?
        && factors.conj_psi_tau.equals(&closed.conj_psi_tau)?
        && factors
            .zeta_conj_phi_tau
            .equals(&closed.zeta_conj_phi_tau)?;
    Ok(vec![
        Metric::symbolic("symbol-chain", verify_symbol_chain(p)?),
        Metric::symbolic("weight-product", verify_weight_product(p)?),
        Metric::symbolic("closed-forms", closed_ok),
    ])
}

fn symmetry_numeric(p: &SymbolParams, sizes: &[usize], k: usize) -> CheckResult {
    let b = p.b().re;
    let mut symmetry = Vec::new();
    let mut identity = Vec::new();
    for &n in sizes {
        let c = conjugation_at(b, n)?;
        let t = composition_matrix(&sigma_family(p), n)?;
        symmetry.push((n, symmetry_residual(&t, &c, k)?));
        // C_sigma = C (T_psi C_phi) C with the adjoint-side pair
        identity.push((n, sandwich_residual(&t, &adjoint_side(p, n)?, &c, k)?));
    }
    Ok(vec![
        Metric::residuals("symmetry", MetricClass::Convergence, symmetry),
        Metric::residuals("operator-identity", MetricClass::Convergence, identity),
    ])
}

fn rotation(p: &SymbolParams, b1: f64, theta: f64, n: usize) -> CheckResult {
    let base = SymbolParams::new(*p.a(), Complex64::new(b1, 0.0))?;
    let c1 = composition_matrix(&sigma_family(&base), n)?;
    let rotated = rotation_unitary(-theta, n)
        .mul(&c1)?
        .mul(&rotation_unitary(theta, n))?;
    let target = composition_matrix(&sigma_family(p), n)?;
    let r = rotated.matrix().max_abs_diff(target.matrix())?;
    Ok(vec![Metric::residuals(
        "rotation",
        MetricClass::Exact,
        vec![(n, r)],
    )])
}

fn weighted_adjoint(p: &SymbolParams, sizes: &[usize], k: usize) -> CheckResult {
    let (phi, psi) = phi_psi_family(p);
    let sigma_conj = sigma_family(&p.conj());
    let mut adjoint = Vec::new();
    let mut symmetry = Vec::new();
    for &n in sizes {
        let w = weighted_comp_matrix(&psi, &phi, n)?;
        let c = composition_matrix(&sigma_conj, n)?;
        adjoint.push((n, w.adjoint().matrix().max_abs_diff(c.matrix())?));
        symmetry.push((
            n,
            symmetry_residual(&w, &rotated_conjugation(p.b().conj(), n)?, k)?,
        ));
    }
    Ok(vec![
        Metric::residuals("adjoint-is-composition", MetricClass::Exact, adjoint),
        Metric::residuals("symmetry", MetricClass::Convergence, symmetry),
    ])
}

fn reducing_subspace(p: &SymbolParams, n: usize) -> CheckResult {
    let (phi, psi) = phi_psi_family(p);
    let c = composition_matrix(&phi, n)?;
    let m = c.matrix();
    let one = Complex64::one();
    let mut block = (m[(0, 0)] - one).norm();
    for i in 1..n {
        block = block.max(m[(i, 0)].norm()).max(m[(0, i)].norm());
    }
    let w = weighted_comp_matrix(&psi, &phi, n - 1)?;
    let shift = m.trailing_block().max_abs_diff(&w.matrix().scale(*p.a()))?;
    Ok(vec![
        Metric::residuals("block-structure", MetricClass::Exact, vec![(n, block)]),
        Metric::residuals("shift-identity", MetricClass::Exact, vec![(n, shift)]),
    ])
}

/// `C_phi` under `1 ⊕ C'`, where `C'` is the conjugation of the weighted
/// operator on `zH^2`.
fn phi_conjugation(p: &SymbolParams, n: usize) -> Result<ConjLinearOp, CheckError> {
    Ok(rotated_conjugation(p.b().conj(), n - 1)?.with_leading_scalar(Complex64::one()))
}

fn summary_phi_side(p: &SymbolParams, sizes: &[usize], k: usize) -> CheckResult {
    let (phi, _) = phi_psi_family(p);
    let sigma = sigma_family(p);
    let mut phi_side = Vec::new();
    let mut sigma_side = Vec::new();
    for &n in sizes {
        let c_phi = composition_matrix(&phi, n)?;
        phi_side.push((n, symmetry_residual(&c_phi, &phi_conjugation(p, n)?, k)?));
        let c_sigma = composition_matrix(&sigma, n)?;
        sigma_side.push((
            n,
            symmetry_residual(&c_sigma, &rotated_conjugation(*p.b(), n)?, k)?,
        ));
    }
    Ok(vec![
        Metric::residuals("phi-symmetry", MetricClass::Convergence, phi_side),
        Metric::residuals("sigma-symmetry", MetricClass::Convergence, sigma_side),
    ])
}

fn mismatched(a: f64, b: f64, b_prime: f64, sizes: &[usize], k: usize) -> CheckResult {
    let p = SymbolParams::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0))?;
    let sigma = sigma_family(&p);
    let values = per_size(sizes, |n| {
        Ok(symmetry_residual(
            &composition_matrix(&sigma, n)?,
            &conjugation_at(b_prime, n)?,
            k,
        )?)
    })?;
    Ok(vec![Metric::residuals(
        "symmetry",
        MetricClass::Convergence,
        values,
    )])
}

fn perturbed_weight(p: &SymbolParams<h2sym_core::exact::Rational>) -> CheckResult {
    let zeta = zeta_ratfunc(&p.b().re)?;
    let bump = GRatRatFunc::polynomial(GRatPoly::linear(GRat::one(), grat_real(1, 10)));
    let holds = verify_weight_product_with(p, &zeta.mul(&bump)?)?;
    Ok(vec![Metric::symbolic("weight-product", holds)])
}

fn identity_control(b: f64, sizes: &[usize], k: usize) -> CheckResult {
    let mut symmetry = Vec::new();
    let mut definitional = Vec::new();
    for &n in sizes {
        let c = conjugation_at(b, n)?;
        let t = TruncOp::identity(n);
        symmetry.push((n, symmetry_residual(&t, &c, k)?));
        definitional.push((n, symmetry_residual_definitional(&t, &c, k)?));
    }
    Ok(vec![
        Metric::residuals("symmetry", MetricClass::Convergence, symmetry),
        Metric::residuals("definitional", MetricClass::Convergence, definitional),
    ])
}

/// `phi = 1/(3 - z)` against `J T_zeta C_tau` at its interior fixed point.
fn one_over_three_minus_z(sizes: &[usize], k: usize) -> CheckResult {
    let c = |x: f64| Complex64::new(x, 0.0);
    let phi = Moebius::new(c(0.0), c(1.0), c(-1.0), c(3.0))?;
    let fixed = (3.0 - 5f64.sqrt()) / 2.0;
    let values = per_size(sizes, |n| {
        Ok(symmetry_residual(
            &composition_matrix(&phi, n)?,
            &conjugation_at(fixed, n)?,
            k,
        )?)
    })?;
    Ok(vec![Metric::residuals(
        "symmetry",
        MetricClass::Convergence,
        values,
    )])
}

pub(crate) fn evaluate(
    check: Check,
    params: &SampleParams,
    sizes: &[usize],
    k: usize,
) -> CheckResult {
    let n = sizes.last().copied().unwrap_or(0);
    match (check, params) {
        (Check::CowenAdjoint, SampleParams::SelfMap(m)) => cowen_adjoint(m, n),
        (Check::ConjugationProduct, SampleParams::Conjugation { b }) => {
            conjugation_product(*b, sizes, k)
        }
        (Check::RealCommutation, p) => real_commutation(symbol(p)?, n),
        (Check::UnitaryInvolution, SampleParams::Conjugation { b }) => {
            unitary_involution(*b, sizes, k)
        }
        (Check::AdjointFamily, p) => adjoint_family(symbol(p)?, n),
        (Check::Symbolic, SampleParams::Exact(p)) => symbolic(p),
        (Check::SymmetryNumeric, p) => symmetry_numeric(symbol(p)?, sizes, k),
        (Check::Rotation, SampleParams::Rotated { params, b1, theta }) => {
            rotation(params, *b1, *theta, n)
        }
        (Check::WeightedAdjoint, p) => weighted_adjoint(symbol(p)?, sizes, k),
        (Check::ReducingSubspace, p) => reducing_subspace(symbol(p)?, n),
        (Check::SummaryPhiSide, p) => summary_phi_side(symbol(p)?, sizes, k),
        (
            Check::MismatchedConjugation,
            SampleParams::Fixed(FixedConfig::Mismatched { a, b, b_prime }),
        ) => mismatched(*a, *b, *b_prime, sizes, k),
        (Check::PerturbedWeight, SampleParams::Exact(p)) => perturbed_weight(p),
        (Check::IdentityControl, SampleParams::Conjugation { b }) => identity_control(*b, sizes, k),
        (Check::OneOverThreeMinusZ, SampleParams::Fixed(FixedConfig::OneOverThreeMinusZ)) => {
            one_over_three_minus_z(sizes, k)
        }
        _ => Err(CheckError::WrongParams),
    }
}

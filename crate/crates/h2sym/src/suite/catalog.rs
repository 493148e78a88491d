use super::sampling::{FixedConfig, Sampler};
use super::{Check, CheckClass, Expectation, Scenario, Tolerances};
use crate::DEFAULT_SEED;

/// Bumped whenever a scenario's defaults or checks change.
pub const CATALOG_VERSION: u32 = 1;

const SYMBOLIC_SAMPLES: usize = 100;
const CONVERGENCE_SAMPLES: usize = 25;
const CONVERGENCE_SIZES: [usize; 3] = [64, 128, 256];
const EXACT_SIZE: usize = 64;
const BLOCK: usize = 16;

fn scenario(
    id: &'static str,
    claim: &'static str,
    class: CheckClass,
    sampler: Sampler,
    samples: usize,
    check: Check,
) -> Scenario {
    let sizes = match class {
        CheckClass::ExactSymbolic => Vec::new(),
        CheckClass::ExactNumeric => vec![EXACT_SIZE],
        CheckClass::Convergence => CONVERGENCE_SIZES.to_vec(),
    };
    Scenario {
        id,
        claim,
        class,
        expectation: Expectation::Pass,
        sampler,
        samples,
        sizes,
        block: BLOCK,
        tolerances: Tolerances::default(),
        seed: DEFAULT_SEED,
        check,
    }
}

/// One positive scenario per result, in a fixed order with stable ids.
pub fn scenario_catalog() -> Vec<Scenario> {
    use CheckClass::*;
    vec![
        scenario(
            "thm1-cowen-adjoint",
            "C_sigma^* = T_g C_phi T_h^* for a linear-fractional self-map sigma",
            ExactNumeric,
            Sampler::SelfMap,
            CONVERGENCE_SAMPLES,
            Check::CowenAdjoint,
        ),
        scenario(
            "thm2-conjugation-product",
            "J T_zeta C_tau is a conjugation: J and T_zeta C_tau are commuting isometric involutions",
            Convergence,
            Sampler::ConjugationB,
            CONVERGENCE_SAMPLES,
            Check::ConjugationProduct,
        ),
        scenario(
            "thm3-real-commutation",
            "J commutes with T_psi, C_phi and W_psi,phi when the symbols are real on (-1, 1)",
            ExactNumeric,
            Sampler::RealAB,
            CONVERGENCE_SAMPLES,
            Check::RealCommutation,
        ),
        scenario(
            "thm4-unitary-involution",
            "T_zeta C_tau is unitary and self-adjoint",
            Convergence,
            Sampler::ConjugationB,
            CONVERGENCE_SAMPLES,
            Check::UnitaryInvolution,
        ),
        scenario(
            "thm5-adjoint",
            "C_sigma^* = T_psi C_phi with psi = 1/(1 - b(1 - conj a)z), phi = conj(a) z psi",
            ExactNumeric,
            Sampler::RealB,
            SYMBOLIC_SAMPLES,
            Check::AdjointFamily,
        ),
        scenario(
            "thm6-symbolic",
            "C_sigma = J T_zeta C_tau T_psi C_phi J T_zeta C_tau, symbol and weight computed exactly",
            ExactSymbolic,
            Sampler::ExactRational,
            SYMBOLIC_SAMPLES,
            Check::Symbolic,
        ),
        scenario(
            "cor6-numeric",
            "C_sigma is complex symmetric with respect to J T_zeta C_tau",
            Convergence,
            Sampler::RealB,
            CONVERGENCE_SAMPLES,
            Check::SymmetryNumeric,
        ),
        scenario(
            "cor7-rotation",
            "C_sigma for b = b1 e^{i theta} equals U_{-theta} C_sigma1 U_theta",
            ExactNumeric,
            Sampler::Rotated,
            CONVERGENCE_SAMPLES,
            Check::Rotation,
        ),
        scenario(
            "cor8-weighted-adjoint",
            "W_psi,phi is the adjoint of a composition operator and is complex symmetric",
            Convergence,
            Sampler::Rotated,
            CONVERGENCE_SAMPLES,
            Check::WeightedAdjoint,
        ),
        scenario(
            "final-cor-reducing-subspace",
            "zH^2 reduces C_phi and C_phi restricted to zH^2 is unitarily equivalent to a W_psi,phi",
            ExactNumeric,
            Sampler::Rotated,
            CONVERGENCE_SAMPLES,
            Check::ReducingSubspace,
        ),
        scenario(
            "summary-phi-side",
            "C_sigma and C_phi are complex symmetric for complex b",
            Convergence,
            Sampler::Rotated,
            CONVERGENCE_SAMPLES,
            Check::SummaryPhiSide,
        ),
    ]
}

/// Scenarios that must fail, plus one control that must pass.
pub fn negative_controls() -> Vec<Scenario> {
    let mut mismatched = scenario(
        "neg-mismatched-conjugation",
        "C_sigma at b = 1/3 is not symmetric under J T_zeta C_tau built at b' = 2/3",
        CheckClass::Convergence,
        Sampler::Fixed(FixedConfig::Mismatched {
            a: 0.5,
            b: 1.0 / 3.0,
            b_prime: 2.0 / 3.0,
        }),
        1,
        Check::MismatchedConjugation,
    );
    mismatched.expectation = Expectation::Fail;
    let mut perturbed = scenario(
        "neg-perturbed-weight",
        "the weight product is not 1 when zeta is replaced by zeta (1 + z/10)",
        CheckClass::ExactSymbolic,
        Sampler::ExactRational,
        SYMBOLIC_SAMPLES,
        Check::PerturbedWeight,
    );
    perturbed.expectation = Expectation::Fail;
    let identity = scenario(
        "ctl-identity",
        "the identity is complex symmetric under any conjugation",
        CheckClass::Convergence,
        Sampler::ConjugationB,
        CONVERGENCE_SAMPLES,
        Check::IdentityControl,
    );
    vec![mismatched, perturbed, identity]
}

/// Open cases reported without a verdict.
pub fn exploratory() -> Vec<Scenario> {
    let mut q = scenario(
        "explore-one-over-three-minus-z",
        "C_phi for phi = 1/(3 - z) under J T_zeta C_tau at the interior fixed point",
        CheckClass::Convergence,
        Sampler::Fixed(FixedConfig::OneOverThreeMinusZ),
        1,
        Check::OneOverThreeMinusZ,
    );
    q.expectation = Expectation::Exploratory;
    vec![q]
}

/// Everything `verify --all` runs, in report order.
pub fn all_scenarios() -> Vec<Scenario> {
    let mut all = scenario_catalog();
    all.extend(negative_controls());
    all.extend(exploratory());
    all
}

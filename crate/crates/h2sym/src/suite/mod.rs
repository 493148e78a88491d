//! Named verification scenarios, their samplers and verdicts.

mod catalog;
mod checks;
mod run;
mod sampling;

pub use catalog::{
    all_scenarios, exploratory, negative_controls, scenario_catalog, CATALOG_VERSION,
};
pub use checks::{Metric, MetricClass, MetricValues};
pub use run::{run_scenario, run_scenarios, SampleRecord, SampleSummary, Verdict};
pub use sampling::{SampleParams, Sampler};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckClass {
    ExactSymbolic,
    ExactNumeric,
    Convergence,
}

/// What the scenario is expected to do at default configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Pass,
    Fail,
    /// Reports residuals without a verdict.
    Exploratory,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Exact-class residuals; also the roundoff floor below which a
    /// convergence sequence may stop decreasing.
    pub exact: f64,
    /// Largest-N residual for convergence metrics.
    pub convergence: f64,
    /// Largest imaginary part of a matrix that must be real.
    pub real: f64,
    /// A failing residual must exceed this for a negative control to count
    /// as clearly failed.
    pub control_margin: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact: 1e-12,
            convergence: 1e-8,
            real: 1e-14,
            control_margin: 1e-3,
        }
    }
}

/// The operator identity a scenario evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Check {
    CowenAdjoint,
    ConjugationProduct,
    RealCommutation,
    UnitaryInvolution,
    AdjointFamily,
    Symbolic,
    SymmetryNumeric,
    Rotation,
    WeightedAdjoint,
    ReducingSubspace,
    SummaryPhiSide,
    MismatchedConjugation,
    PerturbedWeight,
    IdentityControl,
    OneOverThreeMinusZ,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub id: &'static str,
    /// The identity or property being checked.
    pub claim: &'static str,
    pub class: CheckClass,
    pub expectation: Expectation,
    pub sampler: Sampler,
    pub samples: usize,
    /// Truncation orders, ascending. Unused by symbolic scenarios.
    pub sizes: Vec<usize>,
    /// Leading block compared by convergence metrics.
    pub block: usize,
    pub tolerances: Tolerances,
    pub seed: u64,
    pub(crate) check: Check,
}

/// User overrides applied on top of catalog defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub tol_exact: Option<f64>,
    pub tol_conv: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown scenario id {0:?}")]
    UnknownScenario(String),
    #[error("tolerance {name} must be positive and finite, got {value}")]
    BadTolerance { name: &'static str, value: f64 },
    #[error("block size k = {k} exceeds truncation order N = {n} in scenario {id}")]
    BlockTooLarge {
        id: &'static str,
        k: usize,
        n: usize,
    },
    #[error("truncation order must be at least 1")]
    EmptyTruncation,
}

impl Scenario {
    /// Applies overrides. Convergence scenarios with an `n` override run at
    /// `n/4`, `n/2` and `n`.
    pub fn with_overrides(mut self, o: &Overrides) -> Result<Scenario, ConfigError> {
        for (name, value) in [("tol-exact", o.tol_exact), ("tol-conv", o.tol_conv)] {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    return Err(ConfigError::BadTolerance { name, value: v });
                }
            }
        }
        if let Some(t) = o.tol_exact {
            self.tolerances.exact = t;
        }
        if let Some(t) = o.tol_conv {
            self.tolerances.convergence = t;
        }
        if self.class == CheckClass::ExactSymbolic {
            return Ok(self);
        }
        if let Some(n) = o.n {
            if n == 0 {
                return Err(ConfigError::EmptyTruncation);
            }
            self.sizes = if self.sizes.len() > 1 {
                vec![(n / 4).max(1), (n / 2).max(1), n]
            } else {
                vec![n]
            };
            self.sizes.dedup();
        }
        if let Some(k) = o.k {
            self.block = k;
        }
        let smallest = self.sizes[0];
        if self.block > smallest || self.block == 0 {
            return Err(ConfigError::BlockTooLarge {
                id: self.id,
                k: self.block,
                n: smallest,
            });
        }
        Ok(self)
    }
}

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::{evaluate, Metric};
use super::sampling::SampleParams;
use super::{CheckClass, Expectation, Scenario, Tolerances};

/// Full evidence for one sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    pub index: usize,
    pub params: SampleParams,
    pub passed: bool,
    pub metrics: Vec<Metric>,
    pub error: Option<String>,
}

/// Compact per-sample line kept for every sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSummary {
    pub index: usize,
    pub passed: bool,
    /// Largest headline residual; `None` when all metrics are symbolic.
    pub worst: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub id: &'static str,
    pub claim: &'static str,
    pub class: CheckClass,
    pub expectation: Expectation,
    pub seed: u64,
    pub sizes: Vec<usize>,
    pub block: usize,
    pub tolerances: Tolerances,
    /// Every sample met its class tolerance.
    pub passed: bool,
    /// `None` for exploratory scenarios.
    pub as_expected: Option<bool>,
    /// `None` means every metric was an exact identity.
    pub worst_residual: Option<f64>,
    pub failed_samples: usize,
    pub samples: Vec<SampleSummary>,
    /// The three most severe samples, worst first.
    pub worst_samples: Vec<SampleRecord>,
    pub wall_time_ms: f64,
}

const KEPT_WORST: usize = 3;

/// Per-scenario stream: depends only on the run seed and the id, so any
/// subset of scenarios reproduces the same samples.
fn scenario_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in id.bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn evaluate_sample(s: &Scenario, index: usize, params: SampleParams) -> SampleRecord {
    match evaluate(s.check, &params, &s.sizes, s.block) {
        Ok(metrics) => SampleRecord {
            index,
            passed: metrics.iter().all(|m| m.passes(&s.tolerances)),
            params,
            metrics,
            error: None,
        },
        Err(e) => SampleRecord {
            index,
            params,
            passed: false,
            metrics: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

fn severity(r: &SampleRecord, tol: &Tolerances) -> f64 {
    if r.error.is_some() {
        return f64::INFINITY;
    }
    r.metrics
        .iter()
        .map(|m| m.severity(tol))
        .fold(0.0, f64::max)
}

fn worst_headline(metrics: &[Metric]) -> Option<f64> {
    metrics
        .iter()
        .filter_map(Metric::headline)
        .reduce(|a, b| if a.is_nan() || b > a { b } else { a })
}

/// Draws and evaluates the scenario's samples. Deterministic given the
/// scenario and its seed.
pub fn run_scenario(s: &Scenario) -> Verdict {
    let start = Instant::now();
    let mut rng = scenario_rng(s.seed, s.id);
    let params: Vec<SampleParams> = (0..s.samples).map(|_| s.sampler.draw(&mut rng)).collect();
    let records: Vec<SampleRecord> = params
        .into_par_iter()
        .enumerate()
        .map(|(i, p)| evaluate_sample(s, i, p))
        .collect();

    let tol = &s.tolerances;
    let passed = records.iter().all(|r| r.passed);
    let clearly_failed = records
        .iter()
        .all(|r| r.error.is_none() && r.metrics.iter().any(|m| m.fails_clearly(tol)));
    let as_expected = match s.expectation {
        Expectation::Pass => Some(passed),
        Expectation::Fail => Some(clearly_failed),
        Expectation::Exploratory => None,
    };
    let samples: Vec<SampleSummary> = records
        .iter()
        .map(|r| SampleSummary {
            index: r.index,
            passed: r.passed,
            worst: if r.error.is_some() {
                Some(f64::INFINITY)
            } else {
                worst_headline(&r.metrics)
            },
        })
        .collect();
    let worst_residual =
        samples
            .iter()
            .filter_map(|x| x.worst)
            .reduce(|a, b| if a.is_nan() || b > a { b } else { a });

    let mut order: Vec<(f64, usize)> = records
        .iter()
        .map(|r| (severity(r, tol), r.index))
        .collect();
    // stable: ties keep sample order
    order.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
    let worst_samples = order
        .iter()
        .take(KEPT_WORST)
        .map(|&(_, i)| records[i].clone())
        .collect();

    Verdict {
        id: s.id,
        claim: s.claim,
        class: s.class,
        expectation: s.expectation,
        seed: s.seed,
        sizes: s.sizes.clone(),
        block: s.block,
        tolerances: s.tolerances,
        passed,
        as_expected,
        worst_residual,
        failed_samples: records.iter().filter(|r| !r.passed).count(),
        samples,
        worst_samples,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs scenarios concurrently; verdicts come back in input order.
pub fn run_scenarios(scenarios: &[Scenario]) -> Vec<Verdict> {
    scenarios.par_iter().map(run_scenario).collect()
}

//! Run configuration and the report normal form: a JSON document with fixed
//! key order and residuals in 17-significant-digit scientific notation.

use std::time::Instant;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::suite::{
    all_scenarios, run_scenarios, CheckClass, ConfigError, Expectation, Metric, MetricClass,
    MetricValues, Overrides, SampleRecord, Scenario, Tolerances, Verdict, CATALOG_VERSION,
};
use crate::TOOLKIT_VERSION;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    StructuredReport,
    MatrixCsv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub selection: Selection,
    pub seed: u64,
    pub overrides: Overrides,
}

impl RunConfig {
    /// The selected scenarios in catalog order with seed and overrides
    /// applied.
    pub fn scenarios(&self) -> Result<Vec<Scenario>, ConfigError> {
        let all = all_scenarios();
        let chosen: Vec<Scenario> = match &self.selection {
            Selection::All => all,
            Selection::Ids(ids) => {
                if let Some(bad) = ids
                    .iter()
                    .find(|id| !all.iter().any(|s| s.id == id.as_str()))
                {
                    return Err(ConfigError::UnknownScenario(bad.clone()));
                }
                all.into_iter()
                    .filter(|s| ids.iter().any(|id| id == s.id))
                    .collect()
            }
        };
        chosen
            .into_iter()
            .map(|mut s| {
                s.seed = self.seed;
                s.with_overrides(&self.overrides)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub toolkit_version: &'static str,
    pub catalog_version: u32,
    pub config: RunConfig,
    pub verdicts: Vec<Verdict>,
    /// Positive scenarios passed and negative controls failed.
    pub overall_pass: bool,
    pub wall_time_ms: f64,
}

pub fn run(cfg: &RunConfig) -> Result<Report, ConfigError> {
    let scenarios = cfg.scenarios()?;
    let start = Instant::now();
    let verdicts = run_scenarios(&scenarios);
    Ok(Report {
        toolkit_version: TOOLKIT_VERSION,
        catalog_version: CATALOG_VERSION,
        config: cfg.clone(),
        overall_pass: verdicts.iter().all(|v| v.as_expected != Some(false)),
        verdicts,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn residual(x: f64) -> String {
    format!("{x:.16e}")
}

impl Report {
    /// The normal form. Identical configurations give identical documents
    /// apart from `wall_time_ms` fields.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&ReportDoc::from(self))
            .expect("report serialization is infallible");
        s.push('\n');
        s
    }

    /// One line per verdict for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let tag = match v.as_expected {
                None => "INFO",
                Some(true) => "OK",
                Some(false) => "UNEXPECTED",
            };
            let worst = v
                .worst_residual
                .map_or_else(|| "exact".to_string(), residual);
            out.push_str(&format!(
                "{tag:<10} {:<32} {:<4} expected={:<11} worst={worst}\n",
                v.id,
                if v.passed { "pass" } else { "fail" },
                expectation_name(v.expectation),
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.overall_pass { "pass" } else { "fail" }
        ));
        out
    }
}

fn expectation_name(e: Expectation) -> &'static str {
    match e {
        Expectation::Pass => "pass",
        Expectation::Fail => "fail",
        Expectation::Exploratory => "exploratory",
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    toolkit_version: &'a str,
    catalog_version: u32,
    config: ConfigDoc,
    overall_pass: bool,
    verdicts: Vec<VerdictDoc<'a>>,
    wall_time_ms: f64,
}

#[derive(Serialize)]
struct ConfigDoc {
    selection: Vec<String>,
    seed: u64,
    n: Option<usize>,
    k: Option<usize>,
    tol_exact: Option<String>,
    tol_conv: Option<String>,
}

#[derive(Serialize)]
struct TolerancesDoc {
    exact: String,
    convergence: String,
    real: String,
    control_margin: String,
}

#[derive(Serialize)]
struct VerdictDoc<'a> {
    id: &'a str,
    claim: &'a str,
    class: CheckClass,
    expectation: Expectation,
    verdict: &'static str,
    as_expected: Option<bool>,
    worst_residual: String,
    seed: u64,
    sizes: &'a [usize],
    block: usize,
    tolerances: TolerancesDoc,
    sample_count: usize,
    failed_samples: usize,
    samples: Vec<SummaryDoc>,
    worst_samples: Vec<RecordDoc>,
    wall_time_ms: f64,
}

#[derive(Serialize)]
struct SummaryDoc {
    index: usize,
    passed: bool,
    worst: String,
}

#[derive(Serialize)]
struct RecordDoc {
    index: usize,
    params: Pairs,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    metrics: Vec<MetricDoc>,
}

#[derive(Serialize)]
struct MetricDoc {
    name: &'static str,
    class: MetricClass,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residuals: Option<Vec<PointDoc>>,
}

#[derive(Serialize)]
struct PointDoc {
    n: usize,
    residual: String,
}

/// Ordered key/value pairs serialized as a JSON object.
struct Pairs(Vec<(String, String)>);

impl Serialize for Pairs {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

fn exact_or(x: Option<f64>) -> String {
    x.map_or_else(|| "exact".to_string(), residual)
}

impl<'a> From<&'a Report> for ReportDoc<'a> {
    fn from(r: &'a Report) -> Self {
        let o = &r.config.overrides;
        ReportDoc {
            toolkit_version: r.toolkit_version,
            catalog_version: r.catalog_version,
            config: ConfigDoc {
                selection: match &r.config.selection {
                    Selection::All => vec!["all".to_string()],
                    Selection::Ids(ids) => ids.clone(),
                },
                seed: r.config.seed,
                n: o.n,
                k: o.k,
                tol_exact: o.tol_exact.map(residual),
                tol_conv: o.tol_conv.map(residual),
            },
            overall_pass: r.overall_pass,
            verdicts: r.verdicts.iter().map(verdict_doc).collect(),
            wall_time_ms: r.wall_time_ms,
        }
    }
}

fn tolerances_doc(t: &Tolerances) -> TolerancesDoc {
    TolerancesDoc {
        exact: residual(t.exact),
        convergence: residual(t.convergence),
        real: residual(t.real),
        control_margin: residual(t.control_margin),
    }
}

fn metric_doc(m: &Metric, tol: &Tolerances) -> MetricDoc {
    let (holds, residuals) = match &m.values {
        MetricValues::Symbolic(h) => (Some(*h), None),
        MetricValues::Residuals(v) => (
            None,
            Some(
                v.iter()
                    .map(|&(n, r)| PointDoc {
                        n,
                        residual: residual(r),
                    })
                    .collect(),
            ),
        ),
    };
    MetricDoc {
        name: m.name,
        class: m.class,
        passed: m.passes(tol),
        holds,
        residuals,
    }
}

fn record_doc(r: &SampleRecord, tol: &Tolerances) -> RecordDoc {
    RecordDoc {
        index: r.index,
        params: Pairs(r.params.describe()),
        passed: r.passed,
        error: r.error.clone(),
        metrics: r.metrics.iter().map(|m| metric_doc(m, tol)).collect(),
    }
}

fn verdict_doc(v: &Verdict) -> VerdictDoc<'_> {
    VerdictDoc {
        id: v.id,
        claim: v.claim,
        class: v.class,
        expectation: v.expectation,
        verdict: if v.passed { "pass" } else { "fail" },
        as_expected: v.as_expected,
        worst_residual: exact_or(v.worst_residual),
        seed: v.seed,
        sizes: &v.sizes,
        block: v.block,
        tolerances: tolerances_doc(&v.tolerances),
        sample_count: v.samples.len(),
        failed_samples: v.failed_samples,
        samples: v
            .samples
            .iter()
            .map(|s| SummaryDoc {
                index: s.index,
                passed: s.passed,
                worst: exact_or(s.worst),
            })
            .collect(),
        worst_samples: v
            .worst_samples
            .iter()
            .map(|r| record_doc(r, &v.tolerances))
            .collect(),
        wall_time_ms: v.wall_time_ms,
    }
}

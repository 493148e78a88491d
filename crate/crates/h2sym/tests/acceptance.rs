//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use h2sym::cli::main_with;
use h2sym::report::{self, RunConfig, Selection};
use h2sym::suite::{all_scenarios, run_scenario, CheckClass, Overrides, Verdict};
use h2sym_core::hardy::composition_matrix;
use h2sym_core::moebius::sigma_family;
use h2sym_core::{Complex64, SymbolParams};
use serde_json::Value;

const SEED: u64 = 42;

struct Outcome {
    ok: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run(id: &str) -> (Verdict, Duration) {
    let cfg = RunConfig {
        selection: Selection::Ids(vec![id.to_string()]),
        seed: SEED,
        overrides: Overrides::default(),
    };
    let scenario = cfg.scenarios().expect("catalog id").remove(0);
    let start = Instant::now();
    let v = run_scenario(&scenario);
    (v, start.elapsed())
}

fn worst(v: &Verdict) -> String {
    v.worst_residual
        .map_or_else(|| "exact".into(), report::residual)
}

/// Passing verdict over the expected sample count, within a time bound.
fn scenario_passes(id: &str, samples: usize, sizes: &[usize], bound: Option<Duration>) -> Outcome {
    let (v, elapsed) = run(id);
    let in_time = bound.is_none_or(|b| elapsed <= b);
    outcome(
        v.passed
            && v.failed_samples == 0
            && v.samples.len() == samples
            && v.sizes == sizes
            && in_time,
        format!(
            "{id}: {} samples, {} failed, N = {:?}, worst {}, {:.2} s",
            v.samples.len(),
            v.failed_samples,
            v.sizes,
            worst(&v),
            elapsed.as_secs_f64()
        ),
    )
}

fn exact_symbolic() -> Outcome {
    scenario_passes("thm6-symbolic", 100, &[], Some(Duration::from_secs(5)))
}

fn adjoint_identity() -> Outcome {
    scenario_passes("thm5-adjoint", 100, &[64], Some(Duration::from_secs(10)))
}

fn unitary_involution() -> Outcome {
    scenario_passes("thm4-unitary-involution", 25, &[64, 128, 256], None)
}

fn complex_symmetry() -> Outcome {
    let start = Instant::now();
    let family: Vec<_> = all_scenarios()
        .into_iter()
        .filter(|s| {
            s.class == CheckClass::Convergence && s.expectation == h2sym::suite::Expectation::Pass
        })
        .map(|mut s| {
            s.seed = SEED;
            run_scenario(&s)
        })
        .collect();
    let elapsed = start.elapsed();
    let cor6 = family
        .iter()
        .find(|v| v.id == "cor6-numeric")
        .expect("cor6 in catalog");
    let ok = cor6.passed
        && cor6.samples.len() == 25
        && cor6.sizes == [64, 128, 256]
        && cor6.block == 16
        && family.iter().all(|v| v.passed)
        && elapsed <= Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "cor6-numeric worst {}; {} convergence scenarios in {:.2} s",
            worst(cor6),
            family.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn rotation() -> Outcome {
    scenario_passes("cor7-rotation", 25, &[64], None)
}

fn reducing_subspace() -> Outcome {
    scenario_passes("final-cor-reducing-subspace", 25, &[64], None)
}

fn real_commutation() -> Outcome {
    scenario_passes("thm3-real-commutation", 25, &[64], None)
}

fn trivial_oracles() -> Outcome {
    let n = 32;
    let mut ok = true;
    let mut worst_diag = 0.0f64;
    for &a in &[
        Complex64::new(0.5, 0.25),
        Complex64::new(-0.7, 0.0),
        Complex64::new(0.0, 0.9),
    ] {
        // b = 0: C_sigma = diag(a^n) exactly
        let p = SymbolParams::new(a, Complex64::new(0.0, 0.0)).unwrap();
        let m = composition_matrix(&sigma_family(&p), n).unwrap();
        let mut power = Complex64::new(1.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j {
                    power
                } else {
                    Complex64::new(0.0, 0.0)
                };
                ok &= m.matrix()[(i, j)] == want;
            }
            power *= a;
        }
        // b != 0: the diagonal is still a^j
        let p = SymbolParams::new(a * 0.8, Complex64::new(0.1, 0.0)).unwrap();
        let m = composition_matrix(&sigma_family(&p), n).unwrap();
        let mut power = Complex64::new(1.0, 0.0);
        for j in 0..n {
            worst_diag = worst_diag.max((m.matrix()[(j, j)] - power).norm());
            power *= a * 0.8;
        }
    }
    // a = 1 forces sigma(z) = z
    let p = SymbolParams::new(Complex64::new(1.0, 0.0), Complex64::new(0.3, 0.0)).unwrap();
    let id = composition_matrix(&sigma_family(&p), n).unwrap();
    let identity_exact = (0..n).all(|i| {
        (0..n).all(|j| id.matrix()[(i, j)] == Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    });
    outcome(
        ok && identity_exact && worst_diag <= 1e-12,
        format!(
            "b = 0 diagonal exact: {ok}; a = 1 identity exact: {identity_exact}; affine diagonal error {}",
            report::residual(worst_diag)
        ),
    )
}

fn negative_controls() -> Outcome {
    let (mismatched, _) = run("neg-mismatched-conjugation");
    let (perturbed, _) = run("neg-perturbed-weight");
    let (control, _) = run("ctl-identity");
    let at_256 = mismatched.worst_samples[0]
        .metrics
        .iter()
        .filter_map(|m| match &m.values {
            h2sym::suite::MetricValues::Residuals(v) => v.iter().find(|p| p.0 == 256).map(|p| p.1),
            _ => None,
        })
        .next()
        .unwrap_or(f64::NAN);
    let ok = at_256 > 1e-3
        && mismatched.as_expected == Some(true)
        && perturbed.failed_samples == perturbed.samples.len()
        && perturbed.as_expected == Some(true)
        && control.passed;
    outcome(
        ok,
        format!(
            "mismatched residual at N = 256: {}; perturbed weight false on {}/{} samples; identity control {}",
            report::residual(at_256),
            perturbed.failed_samples,
            perturbed.samples.len(),
            if control.passed { "passes" } else { "fails" }
        ),
    )
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("wall_time_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn verify_all() -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with(
        ["h2sym", "verify", "--all", "--seed", "42"],
        &mut out,
        &mut err,
    );
    let mut doc: Value = serde_json::from_slice(&out).unwrap_or(Value::Null);
    strip_timing(&mut doc);
    (code, doc)
}

fn determinism() -> Outcome {
    let (c1, first) = verify_all();
    let (c2, second) = verify_all();
    let verdicts = first["verdicts"].as_array().map_or(0, Vec::len);
    outcome(
        c1 == 0 && c2 == 0 && first == second && verdicts >= 10 && first != Value::Null,
        format!(
            "exit codes {c1}, {c2}; {verdicts} verdicts; identical modulo timing: {}",
            first == second
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("exact symbolic suite", exact_symbolic),
        ("adjoint identity at N = 64", adjoint_identity),
        (
            "T_zeta C_tau self-adjoint, unitary, involutive",
            unitary_involution,
        ),
        (
            "complex symmetry of C_sigma, convergence family",
            complex_symmetry,
        ),
        ("rotation equivalence", rotation),
        ("reducing subspace and shift identity", reducing_subspace),
        ("real symbols give real matrices", real_commutation),
        ("trivial-case oracles", trivial_oracles),
        ("negative controls fail", negative_controls),
        ("report determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.ok {
            failed += 1;
        }
        println!(
            "acceptance {:>2} {}: {name} ({})",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

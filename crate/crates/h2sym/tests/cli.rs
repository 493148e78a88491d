use std::path::Path;
use std::process::{Command, Output};

use h2sym::csv::read_matrix_csv;
use h2sym_core::hardy::{composition_matrix, weighted_comp_matrix};
use h2sym_core::moebius::{phi_psi_family, sigma_family, tau_zeta};
use h2sym_core::{Complex64, SymbolParams};

fn h2sym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_h2sym"))
        .args(args)
        .env_remove("H2SYM_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn sigma_matrix_matches_binomial_expansion() {
    let o = h2sym(&["matrix", "sigma", "--a", "0.5", "--b", "0.5", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "# family=sigma a=0.5+0.0i b=0.5+0.0i N=3\n\
         1.0:0.0,0.25:0.0,0.0625:0.0\n\
         0.0:0.0,0.5:0.0,0.25:0.0\n\
         0.0:0.0,0.0:0.0,0.25:0.0\n"
    );
}

#[test]
fn constant_symbol_matrix() {
    let o = h2sym(&["matrix", "sigma", "--a", "0", "--b", "0.3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "# family=sigma a=0.0+0.0i b=0.3+0.0i N=2\n1.0:0.0,0.3:0.0\n0.0:0.0,0.0:0.0\n"
    );
}

#[test]
fn inadmissible_parameters_exit_2_naming_the_constraint() {
    for family in ["sigma", "phi", "weighted"] {
        let o = h2sym(&["matrix", family, "--a", "0.5", "--b", "1.2"]);
        assert_eq!(o.status.code(), Some(2));
        assert!(stderr(&o).contains("|a| + |b(1-a)| <= 1"), "{}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let o = h2sym(&["matrix", "tau-zeta", "--b", "0.5+0.1i"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exported_matrices_round_trip_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let a = Complex64::new(0.3, 0.2);
    let b = Complex64::new(0.4, -0.1);
    let p = SymbolParams::new(a, b).unwrap();
    let (phi, psi) = phi_psi_family(&p);
    let (tau, zeta) = tau_zeta(0.4).unwrap();
    let n = 12;
    let cases = [
        (
            "sigma",
            "0.4-0.1i",
            composition_matrix(&sigma_family(&p), n).unwrap(),
        ),
        ("phi", "0.4-0.1i", composition_matrix(&phi, n).unwrap()),
        (
            "weighted",
            "0.4-0.1i",
            weighted_comp_matrix(&psi, &phi, n).unwrap(),
        ),
        (
            "tau-zeta",
            "0.4",
            weighted_comp_matrix(&zeta, &tau, n).unwrap(),
        ),
    ];
    for (family, b_arg, expected) in cases {
        let path = dir.path().join(format!("{family}.csv"));
        let o = h2sym(&[
            "matrix",
            family,
            "--a",
            "0.3+0.2i",
            "--b",
            b_arg,
            "--n",
            "12",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let file = std::fs::File::open(Path::new(&path)).unwrap();
        let (header, m) = read_matrix_csv(std::io::BufReader::new(file)).unwrap();
        assert_eq!(header.family, family);
        assert_eq!(header.n, n);
        for (x, y) in m.entries().iter().zip(expected.matrix().entries()) {
            assert_eq!(
                (x.re.to_bits(), x.im.to_bits()),
                (y.re.to_bits(), y.im.to_bits())
            );
        }
    }
}

#[test]
fn adjoint_examples() {
    let o = h2sym(&["adjoint"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sigma(z) = z\ng(z) = 1\nh(z) = 1\nphi(z) = z\n");

    // sigma = z/2 + 1/4
    let o = h2sym(&["adjoint", "--a", "0.5", "--b", "0.25"]);
    assert_eq!(
        stdout(&o),
        "sigma(z) = 0.5z + 0.25\ng(z) = 1/(-0.25z + 1)\nh(z) = 1\nphi(z) = (0.5z)/(-0.25z + 1)\n"
    );

    // z/(2 - z)
    let o = h2sym(&["adjoint", "--a", "1", "--c", "-1", "--d", "2"]);
    assert_eq!(
        stdout(&o),
        "sigma(z) = (0.5z)/(-0.5z + 1)\ng(z) = 0.5\nh(z) = -z + 2\nphi(z) = 0.5z + 0.5\n"
    );
}

#[test]
fn adjoint_rejects_non_self_maps() {
    for args in [["--a", "2"], ["--b", "1"]] {
        let mut full = vec!["adjoint"];
        full.extend(args);
        let o = h2sym(&full);
        assert_eq!(o.status.code(), Some(2));
        assert!(stderr(&o).contains("not a self-map"));
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        h2sym(&["verify", "--scenario", "thm5-adjoint", "--n", "64"])
            .status
            .code(),
        Some(0)
    );
    let o = h2sym(&["verify", "--scenario", "no-such-id"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such-id"));
    // a negative control failing is the expected outcome
    assert_eq!(
        h2sym(&["verify", "--scenario", "neg-perturbed-weight"])
            .status
            .code(),
        Some(0)
    );
    // impossible tolerances turn a positive scenario into an unexpected failure
    let o = h2sym(&[
        "verify",
        "--scenario",
        "cor7-rotation",
        "--tol-exact",
        "1e-300",
    ]);
    assert_eq!(o.status.code(), Some(1));
    for bad in [
        &["verify", "--tol-conv", "-1"][..],
        &["verify", "--n", "64", "--k", "32"],
        &["verify", "--format", "matrix-csv"],
        &["verify", "--seed", "x"],
        &["matrix", "sigma", "--a", "1+i"],
        &["matrix", "sigma", "--format", "structured-report"],
        &["frobnicate"],
    ] {
        assert_eq!(h2sym(bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn seed_comes_from_flag_or_environment() {
    let report = |o: &Output| serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap();
    let o = h2sym(&["verify", "--scenario", "cor7-rotation"]);
    assert_eq!(report(&o)["config"]["seed"], 42);
    let o = Command::new(env!("CARGO_BIN_EXE_h2sym"))
        .args(["verify", "--scenario", "cor7-rotation"])
        .env("H2SYM_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(report(&o)["config"]["seed"], 7);
    let o = h2sym(&["verify", "--scenario", "cor7-rotation", "--seed", "9"]);
    assert_eq!(report(&o)["verdicts"][0]["seed"], 9);
}

#[test]
fn subsets_reproduce_full_run_verdicts() {
    let doc = |args: &[&str]| {
        let mut v: serde_json::Value = serde_json::from_slice(&h2sym(args).stdout).unwrap();
        let verdict = v["verdicts"][0].take();
        let mut verdict = verdict;
        verdict.as_object_mut().unwrap().remove("wall_time_ms");
        verdict
    };
    let alone = doc(&["verify", "--scenario", "thm5-adjoint"]);
    let paired = doc(&["verify", "--scenario", "thm5-adjoint,cor7-rotation"]);
    assert_eq!(alone, paired);
}

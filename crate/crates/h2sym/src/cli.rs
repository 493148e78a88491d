//! Command-line interface: `verify`, `matrix` and `adjoint`.
//!
//! Exit codes: 0 success, 1 a scenario contrary to expectation, 2 invalid
//! configuration or parameters.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use h2sym_core::hardy::{composition_matrix, weighted_comp_matrix, TruncOp};
use h2sym_core::moebius::{phi_psi_family, sigma_family, tau_zeta};
use h2sym_core::{Moebius, MoebiusError, SymbolParams};
use num_complex::Complex64;

use crate::complex_arg::parse_complex;
use crate::csv::{write_matrix_csv, MatrixHeader};
use crate::report::{self, OutputFormat, RunConfig, Selection};
use crate::suite::Overrides;
use crate::DEFAULT_SEED;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "h2sym",
    version,
    about = "Verify complex symmetry of composition operators on H^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification scenarios and write a report.
    Verify(VerifyArgs),
    /// Export a finite section as CSV.
    Matrix(MatrixArgs),
    /// Print Cowen's adjoint data g, h and phi for a linear-fractional map.
    Adjoint(AdjointArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Scenario id; repeat or comma-separate for several.
    #[arg(long = "scenario", value_delimiter = ',', conflicts_with = "all")]
    scenarios: Vec<String>,
    /// Run every scenario (the default when no id is given).
    #[arg(long)]
    all: bool,
    #[arg(long, env = "H2SYM_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest truncation order.
    #[arg(long)]
    n: Option<usize>,
    /// Leading block size for convergence metrics.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    tol_exact: Option<f64>,
    #[arg(long)]
    tol_conv: Option<f64>,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::StructuredReport)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Sigma,
    Phi,
    TauZeta,
    Weighted,
}

impl Family {
    fn id(self) -> &'static str {
        match self {
            Family::Sigma => "sigma",
            Family::Phi => "phi",
            Family::TauZeta => "tau-zeta",
            Family::Weighted => "weighted",
        }
    }
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long, value_parser = parse_complex, default_value = "0", allow_hyphen_values = true)]
    a: Complex64,
    #[arg(long, value_parser = parse_complex, default_value = "0", allow_hyphen_values = true)]
    b: Complex64,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::MatrixCsv)]
    format: OutputFormat,
}

/// `(az + b)/(cz + d)`; defaults give the identity.
#[derive(Debug, Args)]
struct AdjointArgs {
    #[arg(long, value_parser = parse_complex, default_value = "1", allow_hyphen_values = true)]
    a: Complex64,
    #[arg(long, value_parser = parse_complex, default_value = "0", allow_hyphen_values = true)]
    b: Complex64,
    #[arg(long, value_parser = parse_complex, default_value = "0", allow_hyphen_values = true)]
    c: Complex64,
    #[arg(long, value_parser = parse_complex, default_value = "1", allow_hyphen_values = true)]
    d: Complex64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with(
    args: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { EXIT_OK } else { EXIT_INVALID };
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Matrix(a) => cmd_matrix(a, stdout),
        Command::Adjoint(a) => cmd_adjoint(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn cmd_verify(
    a: VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    if a.format != OutputFormat::StructuredReport {
        return Err("verify only writes the structured-report format".into());
    }
    let cfg = RunConfig {
        selection: if a.all || a.scenarios.is_empty() {
            Selection::All
        } else {
            Selection::Ids(a.scenarios)
        },
        seed: a.seed,
        overrides: Overrides {
            n: a.n,
            k: a.k,
            tol_exact: a.tol_exact,
            tol_conv: a.tol_conv,
        },
    };
    let report = report::run(&cfg).map_err(|e| e.to_string())?;
    emit(&a.out, &report.to_json(), stdout)?;
    let _ = write!(stderr, "{}", report.summary());
    Ok(if report.overall_pass {
        EXIT_OK
    } else {
        EXIT_UNEXPECTED
    })
}

fn admissibility_message(a: Complex64, b: Complex64) -> String {
    let sum = a.norm() + (b * (Complex64::new(1.0, 0.0) - a)).norm();
    format!(
        "inadmissible parameters: the symbol needs |b| < 1 and |a| + |b(1-a)| <= 1 \
         (got |b| = {}, |a| + |b(1-a)| = {sum})",
        b.norm()
    )
}

fn family_matrix(family: Family, a: Complex64, b: Complex64, n: usize) -> Result<TruncOp, String> {
    let hardy = |e: h2sym_core::HardyError| e.to_string();
    if family == Family::TauZeta {
        if b.im != 0.0 {
            return Err("tau-zeta needs real b in (-1, 1)".into());
        }
        let (tau, zeta) =
            tau_zeta(b.re).map_err(|_| "tau-zeta needs real b with |b| < 1".to_string())?;
        return weighted_comp_matrix(&zeta, &tau, n).map_err(hardy);
    }
    let p = SymbolParams::new(a, b).map_err(|e| match e {
        MoebiusError::ParameterOutsideDisk | MoebiusError::Inadmissible => {
            admissibility_message(a, b)
        }
        other => other.to_string(),
    })?;
    let (phi, psi) = phi_psi_family(&p);
    match family {
        Family::Sigma => composition_matrix(&sigma_family(&p), n),
        Family::Phi => composition_matrix(&phi, n),
        Family::Weighted => weighted_comp_matrix(&psi, &phi, n),
        Family::TauZeta => unreachable!("handled above"),
    }
    .map_err(hardy)
}

fn cmd_matrix(a: MatrixArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    if a.format != OutputFormat::MatrixCsv {
        return Err("matrix only writes the matrix-csv format".into());
    }
    if a.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let t = family_matrix(a.family, a.a, a.b, a.n)?;
    let header = MatrixHeader {
        family: a.family.id().to_string(),
        a: a.a,
        b: a.b,
        n: a.n,
    };
    let mut buf = Vec::new();
    write_matrix_csv(&mut buf, &header, t.matrix()).map_err(|e| e.to_string())?;
    emit(
        &a.out,
        &String::from_utf8(buf).expect("CSV output is ASCII"),
        stdout,
    )?;
    Ok(EXIT_OK)
}

fn cmd_adjoint(a: AdjointArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let m = Moebius::new(a.a, a.b, a.c, a.d).map_err(|e| e.to_string())?;
    let k = m.krein_adjoint().map_err(|e| match e {
        MoebiusError::NotSelfMap | MoebiusError::PoleInClosedDisk => {
            format!("{m} is not a self-map of the unit disk: {e}")
        }
        other => other.to_string(),
    })?;
    let text = format!(
        "sigma(z) = {}\ng(z) = {}\nh(z) = {}\nphi(z) = {}\n",
        m.normalized(),
        k.g.normalized(),
        k.h.normalized(),
        k.phi.normalized()
    );
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

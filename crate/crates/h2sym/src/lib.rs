//! Verification suite, report and matrix export for complex symmetric
//! composition operators on the Hardy space, built on `h2sym-core`.

pub mod cli;
pub mod complex_arg;
pub mod csv;
pub mod report;
pub mod suite;

/// Seed used when neither `--seed` nor `H2SYM_SEED` is given.
pub const DEFAULT_SEED: u64 = 42;

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

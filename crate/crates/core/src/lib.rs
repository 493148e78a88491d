//! Composition, Toeplitz and weighted composition operators on the Hardy
//! space `H^2`, represented by their finite sections against the monomial
//! basis, together with exact Gaussian-rational symbol algebra.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! - [`moebius`]: linear-fractional maps, the symbol families `sigma`,
//!   `phi`/`psi`, `tau`/`zeta`, and the Krein adjoint.
//! - [`exact`]: Gaussian-rational polynomials and rational functions with a
//!   tracked square root `s = sqrt(1 - b^2)`.
//! - [`hardy`]: Taylor coefficients, truncated operator matrices,
//!   conjugate-linear operators and complex-symmetry residuals.

#![cfg_attr(not(test), no_std)]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod hardy;
pub mod moebius;
pub mod scalar;

pub use error::{ExactError, HardyError, MoebiusError};
pub use moebius::{AnalyticWeight, FixedPoints, Moebius, SymbolParams};
pub use num_complex::Complex64;
pub use scalar::Real;

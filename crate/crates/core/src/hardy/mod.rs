//! Finite sections of operators on `H^2` against the monomial basis.
//!
//! Entry `(n, j)` of a truncated operator is the `z^n` Taylor coefficient of
//! the image of `z^j`. Composition and Toeplitz matrices are built column by
//! column from truncated power series, so the leading `k x k` block never
//! depends on the truncation order.
//!
//! Residuals are max-abs norms over a leading block; checks that involve
//! non-triangular factors compute at full order `N` and read a block
//! `k <= N/8` to avoid the polluted high-index entries.

mod conj;
mod matrix;
mod ops;
mod series;

pub use conj::{
    compose_conjugation, conjugation_j, sandwich_residual, symmetry_residual,
    symmetry_residual_definitional, ConjLinearOp,
};
pub use matrix::Matrix;
pub use ops::{
    block_decompose, composition_matrix, rotation_unitary, toeplitz_matrix, weighted_comp_matrix,
    Exactness, TruncOp,
};
pub use series::{kernel_vector, taylor_coeffs, CoeffVec, TaylorSeries};

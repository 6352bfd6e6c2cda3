//! Dense real matrices, their norms, and a one-sided Jacobi SVD.

mod matrix;
mod svd;

pub use matrix::{l2_norm, DenseMatrix};
pub use svd::{orthonormality_residual, svd, SvdFactorization, MAX_SWEEPS};

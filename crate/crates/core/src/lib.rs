//! Closed-form sparse and low-rank approximation built on the shrinkage
//! (soft-threshold) function.
//!
//! * [`scalar_prox`]: `shrink` and the scalar keep-or-kill rule.
//! * [`vector_prox`]: entry-wise ℓ1/ℓ0 operators and the ℓ1-ball projection.
//! * [`matrix_prox`]: singular value thresholding and the nuclear-ball projection.
//! * [`linalg`]: dense matrices, norms, one-sided Jacobi SVD.
//! * [`oracle`]: brute-force verifiers for all of the above.
//! * [`io`], [`cli`]: CSV/JSON formats and the `softshrink` command.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix it to `f64`.

pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matrix_prox;
pub mod oracle;
pub mod scalar;
pub mod scalar_prox;
pub mod vector_prox;

pub use error::{Error, Result};
pub use linalg::{svd, DenseMatrix, SvdFactorization};
pub use matrix_prox::{nuclear_ball_nearest, svt, ProxSolution};
pub use scalar::Scalar;
pub use scalar_prox::{hard_keep, scalar_objective, shrink, Beta, Lambda};
pub use vector_prox::{l0_approx, l1_ball_nearest, soft_threshold, solve_budget_lambda, BudgetSolve, Tau};

pub type Matrix = DenseMatrix<f64>;
pub type Matrix32 = DenseMatrix<f32>;
pub type Svd = SvdFactorization<f64>;
pub type Svd32 = SvdFactorization<f32>;
pub type Solution = ProxSolution<f64>;
pub type Solution32 = ProxSolution<f32>;

//! Independent brute-force verifiers for the closed-form operators.
//!
//! Oracles compute their own objectives and competitor sets; the only code
//! they share with the operators under test is [`DenseMatrix`] and its
//! entry-wise norms (plus an SVD where the competitor family is defined by
//! one). Every randomized oracle takes an explicit seed.
//!
//! [`DenseMatrix`]: crate::linalg::DenseMatrix

mod budget;
mod eigen;
mod enumerate;
mod perturb;
pub mod random;
mod report;
pub mod rng;
mod scalar;
mod spectral;

pub use budget::bisect_budget_lambda;
pub use eigen::symmetric_eigs_jacobi;
pub use enumerate::{coordinate_grid_l1, support_enum_l0, support_enum_l0_candidate, MAX_SUPPORT_ENTRIES};
pub use perturb::PerturbationCheck;
pub use random::{random_orthogonal, random_orthonormal_columns};
pub use report::{OracleReport, Verdict, SPECTRAL_TOLERANCE, VECTOR_TOLERANCE};
pub use scalar::grid_min_scalar;
pub use spectral::{feasible_spectral_point, random_budget_spectrum, spectral_family_sweep};

//! Spectral operators: singular value thresholding and the nearest matrix
//! in a nuclear-norm ball.
//!
//! Both operators rotate the problem into the singular basis of `A`, where it
//! separates into scalar problems on the singular values, and rotate back.

use crate::error::Result;
use crate::linalg::{svd, DenseMatrix, SvdFactorization};
use crate::scalar::Scalar;
use crate::scalar_prox::{shrink_unchecked, Beta};
use crate::vector_prox::{solve_budget_magnitudes, Tau};

/// Relative cutoff used for `rank_out`: singular values at or below
/// `RANK_RTOL·max(1, σ₁(input))` count as zero.
pub const RANK_RTOL: f64 = 1e-10;

/// Solution of a proximal problem together with its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ProxSolution<T> {
    pub solution: DenseMatrix<T>,
    pub objective: T,
    /// Threshold actually applied; zero when a budget constraint is inactive.
    pub effective_lambda: T,
    /// Descending spectrum of the input.
    pub sigma_in: Vec<T>,
    /// Descending spectrum of the solution.
    pub sigma_out: Vec<T>,
    pub rank_out: usize,
    /// Exact count of nonzero entries of `solution`.
    pub cardinality_out: usize,
}

impl<T: Scalar> ProxSolution<T> {
    pub(crate) fn new(
        solution: DenseMatrix<T>,
        objective: T,
        effective_lambda: T,
        sigma_in: Vec<T>,
        sigma_out: Vec<T>,
    ) -> Self {
        let leading = sigma_in.first().copied().unwrap_or(T::zero());
        let cutoff = T::lit(RANK_RTOL) * leading.max(T::one());
        let rank_out = sigma_out.iter().filter(|&&s| s > cutoff).count();
        let cardinality_out = solution.cardinality();
        ProxSolution {
            solution,
            objective,
            effective_lambda,
            sigma_in,
            sigma_out,
            rank_out,
            cardinality_out,
        }
    }
}

/// `‖X‖_* + (β/2)‖X − A‖_F²`, with the nuclear norm from a fresh SVD of `x`.
pub fn svt_objective<T: Scalar>(
    x: &DenseMatrix<T>,
    a: &DenseMatrix<T>,
    beta: Beta<T>,
) -> Result<T> {
    let d = x.sub(a)?.frobenius_norm();
    Ok(x.nuclear_norm()? + beta.value() * T::lit(0.5) * d * d)
}

/// Minimizer of `‖X‖_* + (β/2)‖X − A‖_F²`: `U·diag(S_{1/β}(σ))·Vᵀ`.
pub fn svt<T: Scalar>(a: &DenseMatrix<T>, beta: Beta<T>) -> Result<ProxSolution<T>> {
    let factors = svd(a)?;
    let lambda = beta.to_lambda()?.value();
    let sigma_out: Vec<T> = factors
        .sigma()
        .iter()
        .map(|&s| shrink_unchecked(s, lambda))
        .collect();
    let solution = factors.assemble(&sigma_out);
    let d = solution.sub(a)?.frobenius_norm();
    let nuclear: T = sigma_out.iter().copied().sum();
    let objective = nuclear + beta.value() * T::lit(0.5) * d * d;
    Ok(ProxSolution::new(
        solution,
        objective,
        lambda,
        factors.sigma().to_vec(),
        sigma_out,
    ))
}

/// Nearest matrix to `A` in Frobenius distance with `‖X‖_* ≤ τ`.
///
/// The singular values are shrunk by the unique λ with
/// `Σ max(σᵢ − λ, 0) = τ`. When `‖A‖_* ≤ τ` the input is returned unchanged
/// with `effective_lambda = 0`. The objective is `‖X − A‖_F`.
pub fn nuclear_ball_nearest<T: Scalar>(
    a: &DenseMatrix<T>,
    tau: Tau<T>,
) -> Result<ProxSolution<T>> {
    let factors = svd(a)?;
    nuclear_ball_from_factors(a, &factors, tau)
}

/// [`nuclear_ball_nearest`] reusing an existing factorization of `a`.
pub fn nuclear_ball_from_factors<T: Scalar>(
    a: &DenseMatrix<T>,
    factors: &SvdFactorization<T>,
    tau: Tau<T>,
) -> Result<ProxSolution<T>> {
    let sigma_in = factors.sigma().to_vec();
    let budget = solve_budget_magnitudes(&sigma_in, tau);
    if !budget.active {
        return Ok(ProxSolution::new(
            a.clone(),
            T::zero(),
            T::zero(),
            sigma_in.clone(),
            sigma_in,
        ));
    }
    let lambda = budget.lambda_star;
    let sigma_out: Vec<T> = sigma_in
        .iter()
        .map(|&s| shrink_unchecked(s, lambda))
        .collect();
    let solution = factors.assemble(&sigma_out);
    let objective = solution.sub(a)?.frobenius_norm();
    Ok(ProxSolution::new(solution, objective, lambda, sigma_in, sigma_out))
}

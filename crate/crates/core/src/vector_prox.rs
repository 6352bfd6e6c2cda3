//! Entry-wise sparse approximation: soft thresholding (ℓ1), hard
//! thresholding (ℓ0), and the nearest point of an ℓ1 ball.
//!
//! Vectors are `1×n` or `n×1` matrices; every operator here acts on entries
//! independently, so a matrix is treated as the vector of its entries.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::matrix_prox::ProxSolution;
use crate::scalar::Scalar;
use crate::scalar_prox::{hard_keep_unchecked, hard_threshold, shrink_unchecked, Beta, Lambda};

/// Radius of an ℓ1 or nuclear-norm ball. Strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tau<T>(T);

impl<T: Scalar> Tau<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_finite() && value > T::zero() {
            Ok(Tau(value))
        } else {
            Err(Error::Domain(format!(
                "tau must satisfy tau > 0 and be finite, got {value}"
            )))
        }
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Multiplier that puts the shrunken vector on the ℓ1 sphere of radius τ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BudgetSolve<T> {
    /// Zero when the budget does not constrain.
    pub lambda_star: T,
    /// `Σ max(|vᵢ| − λ*, 0)`.
    pub achieved_l1: T,
    /// True when `‖v‖₁ > τ`.
    pub active: bool,
}

/// Entry-wise `shrink(vᵢⱼ, λ)`.
pub fn soft_threshold<T: Scalar>(v: &DenseMatrix<T>, lambda: Lambda<T>) -> DenseMatrix<T> {
    let l = lambda.value();
    v.map(|x| shrink_unchecked(x, l))
}

/// Entry-wise `hard_keep(vᵢⱼ, β)`: minimizer of `card(u) + (β/2)‖u − v‖²`.
pub fn l0_approx<T: Scalar>(v: &DenseMatrix<T>, beta: Beta<T>) -> DenseMatrix<T> {
    let t = hard_threshold(beta);
    v.map(|x| hard_keep_unchecked(x, t))
}

/// Solves `Σ max(|vᵢ| − λ, 0) = τ` for `λ ≥ 0` over the entries of `v`.
pub fn solve_budget_lambda<T: Scalar>(v: &DenseMatrix<T>, tau: Tau<T>) -> BudgetSolve<T> {
    let magnitudes: Vec<T> = v.as_slice().iter().map(|x| x.abs()).collect();
    solve_budget_magnitudes(&magnitudes, tau)
}

/// Budget solve over nonnegative magnitudes (entries of a vector or the
/// singular values of a matrix).
///
/// `g(λ) = Σ max(mᵢ − λ, 0)` is piecewise linear and decreasing with
/// breakpoints at the sorted magnitudes; on the segment where exactly the
/// `k` largest magnitudes exceed λ, `g(λ) = S_k − kλ`, so the root is
/// `(S_k − τ)/k` on the first segment whose lower end still has `g ≥ τ`.
pub fn solve_budget_magnitudes<T: Scalar>(magnitudes: &[T], tau: Tau<T>) -> BudgetSolve<T> {
    let tau = tau.value();
    let total: T = magnitudes.iter().copied().sum();
    if total <= tau {
        return BudgetSolve {
            lambda_star: T::zero(),
            achieved_l1: total,
            active: false,
        };
    }

    let mut sorted = magnitudes.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let mut prefix = T::zero();
    let mut lambda_star = T::zero();
    for k in 0..sorted.len() {
        prefix = prefix + sorted[k];
        let count = T::lit((k + 1) as f64);
        let next = sorted.get(k + 1).copied().unwrap_or(T::zero());
        if prefix - count * next >= tau || k + 1 == sorted.len() {
            lambda_star = ((prefix - tau) / count).max(T::zero());
            break;
        }
    }
    let achieved_l1 = magnitudes
        .iter()
        .map(|&m| (m - lambda_star).max(T::zero()))
        .sum();
    BudgetSolve {
        lambda_star,
        achieved_l1,
        active: true,
    }
}

/// Nearest point to `v` (Euclidean over all entries) with `‖u‖₁ ≤ τ`.
///
/// The returned diagnostics treat `v` as `diag(v)`: `sigma_in`/`sigma_out`
/// are the sorted entry magnitudes and `rank_out` counts the entries above
/// the rank threshold. The objective is `‖u − v‖₂`.
pub fn l1_ball_nearest<T: Scalar>(v: &DenseMatrix<T>, tau: Tau<T>) -> Result<ProxSolution<T>> {
    let budget = solve_budget_lambda(v, tau);
    let solution = if budget.active && budget.lambda_star > T::zero() {
        soft_threshold(v, Lambda::new(budget.lambda_star)?)
    } else {
        v.clone()
    };
    let objective = solution.sub(v)?.frobenius_norm();
    Ok(entrywise_solution(v, solution, objective, budget.lambda_star))
}

/// Soft threshold at λ with objective `λ‖u‖₁ + ½‖u − v‖²`.
pub fn shrink_prox<T: Scalar>(v: &DenseMatrix<T>, lambda: Lambda<T>) -> Result<ProxSolution<T>> {
    let u = soft_threshold(v, lambda);
    let d = u.sub(v)?.frobenius_norm();
    let objective = lambda.value() * u.l1_norm() + T::lit(0.5) * d * d;
    Ok(entrywise_solution(v, u, objective, lambda.value()))
}

/// Soft threshold at `1/β` with objective `‖u‖₁ + (β/2)‖u − v‖²`.
pub fn l1_prox<T: Scalar>(v: &DenseMatrix<T>, beta: Beta<T>) -> Result<ProxSolution<T>> {
    let lambda = beta.to_lambda()?;
    let u = soft_threshold(v, lambda);
    let d = u.sub(v)?.frobenius_norm();
    let objective = u.l1_norm() + beta.value() * T::lit(0.5) * d * d;
    Ok(entrywise_solution(v, u, objective, lambda.value()))
}

/// Hard threshold with objective `card(u) + (β/2)‖u − v‖²`. The reported
/// effective λ is the keep threshold `sqrt(2/β)`.
pub fn l0_prox<T: Scalar>(v: &DenseMatrix<T>, beta: Beta<T>) -> Result<ProxSolution<T>> {
    let u = l0_approx(v, beta);
    let d = u.sub(v)?.frobenius_norm();
    let objective = T::lit(u.cardinality() as f64) + beta.value() * T::lit(0.5) * d * d;
    Ok(entrywise_solution(v, u, objective, hard_threshold(beta)))
}

fn sorted_magnitudes<T: Scalar>(m: &DenseMatrix<T>) -> Vec<T> {
    let mut out: Vec<T> = m.as_slice().iter().map(|x| x.abs()).collect();
    out.sort_by(|a, b| b.partial_cmp(a).unwrap());
    out
}

fn entrywise_solution<T: Scalar>(
    input: &DenseMatrix<T>,
    solution: DenseMatrix<T>,
    objective: T,
    effective_lambda: T,
) -> ProxSolution<T> {
    let sigma_in = sorted_magnitudes(input);
    let sigma_out = sorted_magnitudes(&solution);
    ProxSolution::new(solution, objective, effective_lambda, sigma_in, sigma_out)
}

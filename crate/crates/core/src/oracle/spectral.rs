//! Competitor families for the spectral problems.

use rand::Rng;
use rand_distr::Exp1;

use crate::linalg::{DenseMatrix, SvdFactorization};
use crate::oracle::random::{gaussian_matrix, orthonormalize};
use crate::oracle::report::{OracleReport, Tally};
use crate::oracle::rng::OracleRng;
use crate::scalar::Scalar;

/// Evaluates `objective(U·diag(max(σ − μ, 0))·Vᵀ)` for `count` evenly spaced
/// `μ ∈ [0, mu_max]` and compares with the candidate.
pub fn spectral_family_sweep<T, F>(
    factors: &SvdFactorization<T>,
    candidate: &DenseMatrix<T>,
    objective: F,
    count: usize,
    mu_max: T,
    tolerance: f64,
) -> OracleReport
where
    T: Scalar,
    F: Fn(&DenseMatrix<T>) -> T,
{
    let mut tally = Tally::new();
    let steps = count.max(2) - 1;
    for k in 0..count {
        let mu = mu_max * T::lit(k as f64 / steps as f64);
        let s: Vec<T> = factors
            .sigma()
            .iter()
            .map(|&x| (x - mu).max(T::zero()))
            .collect();
        tally.push(objective(&factors.assemble(&s)).as_f64());
    }
    tally.report(objective(candidate).as_f64(), tolerance)
}

/// Random nonnegative vector of length `k` with sum `≤ tau`: a flat
/// Dirichlet draw scaled by `tau·r`, `r ~ U(0, 1]`.
pub fn random_budget_spectrum<T: Scalar>(rng: &mut OracleRng, k: usize, tau: T) -> Vec<T> {
    let w: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = w.iter().sum();
    let r = 1.0 - rng.gen::<f64>();
    w.iter()
        .map(|x| tau * T::lit(r * x / total.max(f64::MIN_POSITIVE)))
        .collect()
}

/// Point `U'·diag(s)·V'ᵀ` of the nuclear ball of radius `tau`, where `s` is
/// a [`random_budget_spectrum`] and `U'`, `V'` are `U`, `V` (when
/// `factor_noise == 0`) or orthonormalized Gaussian perturbations of them.
pub fn feasible_spectral_point<T: Scalar>(
    rng: &mut OracleRng,
    factors: &SvdFactorization<T>,
    tau: T,
    factor_noise: f64,
) -> DenseMatrix<T> {
    let k = factors.sigma().len();
    let s = random_budget_spectrum(rng, k, tau);
    let (mut u, mut v) = (factors.u().clone(), factors.v().clone());
    if factor_noise > 0.0 {
        let noise = T::lit(factor_noise);
        let gu = gaussian_matrix::<T>(rng, u.rows(), k).scale(noise);
        let gv = gaussian_matrix::<T>(rng, v.rows(), k).scale(noise);
        u = orthonormalize(&u.add(&gu).expect("shape"));
        v = orthonormalize(&v.add(&gv).expect("shape"));
    }
    let us = u.matmul(&DenseMatrix::from_diag(&s).expect("finite")).expect("shape");
    us.matmul(&v.transpose()).expect("shape")
}

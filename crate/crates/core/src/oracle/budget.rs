//! Bisection root of the ℓ1 budget equation.

use crate::scalar::Scalar;

/// λ ≥ 0 with `Σ max(mᵢ − λ, 0) = τ`, found by bisection on `[0, max mᵢ]`
/// until the bracket stops shrinking. Returns 0 when `Σ mᵢ ≤ τ`.
pub fn bisect_budget_lambda<T: Scalar>(magnitudes: &[T], tau: T) -> T {
    let g = |lambda: T| -> T {
        magnitudes
            .iter()
            .map(|&m| (m.abs() - lambda).max(T::zero()))
            .sum()
    };
    if g(T::zero()) <= tau {
        return T::zero();
    }
    let mut lo = T::zero();
    let mut hi = magnitudes.iter().fold(T::zero(), |a, m| a.max(m.abs()));
    for _ in 0..2_000 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > tau {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * T::lit(0.5)
}

//! Brute-force minimization of `λ|x| + ½(x − a)²` on a grid.

use crate::scalar::Scalar;
use crate::scalar_prox::Lambda;

const MIN_STEPS: usize = 1_000;
const REFINED_WIDTH: f64 = 1e-12;

fn objective<T: Scalar>(x: T, a: T, lambda: T) -> T {
    let d = x - a;
    lambda * x.abs() + T::lit(0.5) * d * d
}

/// Grid point minimizing the scalar objective over `[a − span, a + span]`
/// (`steps` intervals, at least 1000), refined by golden-section search on
/// the two intervals around the winner down to width `1e-12`.
pub fn grid_min_scalar<T: Scalar>(a: T, lambda: Lambda<T>, span: T, steps: usize) -> T {
    let l = lambda.value();
    let steps = steps.max(MIN_STEPS);
    let lo = a - span;
    let h = (span + span) / T::lit(steps as f64);
    let at = |k: usize| lo + h * T::lit(k as f64);

    let mut best_k = 0;
    let mut best = objective(at(0), a, l);
    for k in 1..=steps {
        let f = objective(at(k), a, l);
        if f < best {
            best = f;
            best_k = k;
        }
    }

    let mut left = at(best_k.saturating_sub(1));
    let mut right = at((best_k + 1).min(steps));
    let ratio = T::lit((5f64.sqrt() - 1.0) / 2.0);
    let mut x1 = right - ratio * (right - left);
    let mut x2 = left + ratio * (right - left);
    let mut f1 = objective(x1, a, l);
    let mut f2 = objective(x2, a, l);
    let width = T::lit(REFINED_WIDTH).max(T::epsilon() * a.abs().max(T::one()));
    for _ in 0..200 {
        if right - left <= width {
            break;
        }
        if f1 <= f2 {
            right = x2;
            x2 = x1;
            f2 = f1;
            x1 = right - ratio * (right - left);
            f1 = objective(x1, a, l);
        } else {
            left = x1;
            x1 = x2;
            f1 = f2;
            x2 = left + ratio * (right - left);
            f2 = objective(x2, a, l);
        }
    }
    let mid = (left + right) * T::lit(0.5);
    // keep the grid winner if refinement drifted uphill
    if objective(mid, a, l) <= best {
        mid
    } else {
        at(best_k)
    }
}

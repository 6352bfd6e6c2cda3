//! Exhaustive and per-coordinate oracles for the entry-wise problems.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::oracle::report::{OracleReport, Tally, VECTOR_TOLERANCE};
use crate::scalar::Scalar;
use crate::scalar_prox::Beta;
use crate::vector_prox::l0_approx;

/// Largest entry count [`support_enum_l0`] will enumerate.
pub const MAX_SUPPORT_ENTRIES: usize = 20;

fn l0_objective(u: &[f64], v: &[f64], beta: f64) -> f64 {
    let card = u.iter().filter(|&&x| x != 0.0).count() as f64;
    let sq: f64 = u.iter().zip(v).map(|(a, b)| (a - b) * (a - b)).sum();
    card + 0.5 * beta * sq
}

/// Checks `l0_approx(v, β)` against every support pattern with `u = v` on
/// the support.
pub fn support_enum_l0<T: Scalar>(v: &DenseMatrix<T>, beta: Beta<T>) -> Result<OracleReport> {
    support_enum_l0_candidate(v, beta, &l0_approx(v, beta))
}

/// [`support_enum_l0`] for an arbitrary candidate.
pub fn support_enum_l0_candidate<T: Scalar>(
    v: &DenseMatrix<T>,
    beta: Beta<T>,
    candidate: &DenseMatrix<T>,
) -> Result<OracleReport> {
    let n = v.len();
    if n > MAX_SUPPORT_ENTRIES {
        return Err(Error::Size(format!(
            "support enumeration is limited to {MAX_SUPPORT_ENTRIES} entries, got {n}"
        )));
    }
    if candidate.shape() != v.shape() {
        return Err(Error::Dimension("candidate shape differs from input".into()));
    }
    let vs: Vec<f64> = v.as_slice().iter().map(|x| x.as_f64()).collect();
    let cs: Vec<f64> = candidate.as_slice().iter().map(|x| x.as_f64()).collect();
    let b = beta.value().as_f64();

    let mut tally = Tally::new();
    let mut u = vec![0.0; n];
    for mask in 0u32..(1u32 << n) {
        for (i, slot) in u.iter_mut().enumerate() {
            *slot = if mask >> i & 1 == 1 { vs[i] } else { 0.0 };
        }
        tally.push(l0_objective(&u, &vs, b));
    }
    Ok(tally.report(l0_objective(&cs, &vs, b), VECTOR_TOLERANCE))
}

fn l1_coordinate(u: f64, v: f64, beta: f64) -> f64 {
    u.abs() + 0.5 * beta * (u - v) * (u - v)
}

/// Per-coordinate grid minimum of `|u| + (β/2)(u − v)²` (step `1e-3`, then
/// step `1e-6` within one coarse step of the winner), summed over entries
/// and compared with the candidate's objective `‖c‖₁ + (β/2)‖c − v‖²`.
pub fn coordinate_grid_l1<T: Scalar>(
    v: &DenseMatrix<T>,
    beta: Beta<T>,
    candidate: &DenseMatrix<T>,
) -> Result<OracleReport> {
    if candidate.shape() != v.shape() {
        return Err(Error::Dimension("candidate shape differs from input".into()));
    }
    let b = beta.value().as_f64();
    let mut total = 0.0;
    let mut grid_points = 0;
    for &x in v.as_slice() {
        let x = x.as_f64();
        let reach = x.abs() + 1.0 / b + 1.0;
        let (best, tested) = refine_grid(|u| l1_coordinate(u, x, b), x - reach, x + reach);
        total += best;
        grid_points += tested;
    }
    let cand: f64 = candidate
        .as_slice()
        .iter()
        .zip(v.as_slice())
        .map(|(&c, &x)| l1_coordinate(c.as_f64(), x.as_f64(), b))
        .sum();
    Ok(OracleReport::new(cand, total, grid_points, VECTOR_TOLERANCE))
}

fn refine_grid(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, usize) {
    let coarse = 1e-3;
    let fine = 1e-6;
    let n = ((hi - lo) / coarse).ceil() as usize;
    let mut best = (f64::INFINITY, lo);
    for k in 0..=n {
        let x = lo + coarse * k as f64;
        let fx = f(x);
        if fx < best.0 {
            best = (fx, x);
        }
    }
    let centre = best.1;
    let m = (2.0 * coarse / fine).round() as usize;
    for k in 0..=m {
        let x = centre - coarse + fine * k as f64;
        let fx = f(x);
        if fx < best.0 {
            best = (fx, x);
        }
    }
    (best.0, n + m + 2)
}

//! Classical two-sided Jacobi eigenvalue iteration for symmetric matrices,
//! used to cross-check singular values through `eig(AᵀA) = σ²`.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 100;
const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Eigenvalues of a symmetric matrix, descending.
pub fn symmetric_eigs_jacobi<T: Scalar>(s: &DenseMatrix<T>) -> Result<Vec<T>> {
    let (n, cols) = s.shape();
    if n != cols {
        return Err(Error::Dimension(format!("expected a square matrix, got {n}x{cols}")));
    }
    let scale = s.as_slice().iter().fold(T::one(), |m, x| m.max(x.abs()));
    for i in 0..n {
        for j in i + 1..n {
            if (s.get(i, j) - s.get(j, i)).abs() > T::lit(SYMMETRY_TOLERANCE) * scale {
                return Err(Error::Domain(format!(
                    "matrix is not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    let mut a: Vec<Vec<T>> = (0..n).map(|i| s.row(i).to_vec()).collect();
    let total = s.frobenius_norm();
    let target = T::epsilon() * total * T::lit(n.max(1) as f64);
    let off = |a: &[Vec<T>]| -> T {
        let mut sum = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum = sum + a[i][j] * a[i][j];
                }
            }
        }
        sum.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Convergence {
                sweeps,
                residual: (off(&a) / total.max(T::min_positive_value())).as_f64(),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (apq + apq);
                let t = theta.signum() / (theta.abs() + T::one().hypot(theta));
                let c = (T::one() + t * t).sqrt().recip();
                let sn = t * c;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - sn * y;
                    row[q] = sn * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = c * x - sn * y;
                    a[q][k] = sn * x + c * y;
                }
            }
        }
        sweeps += 1;
    }

    let mut eig: Vec<T> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(eig)
}

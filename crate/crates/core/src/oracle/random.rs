//! Random test matrices: Gaussian and uniform fills, orthogonal factors by
//! Gram–Schmidt, and low-rank constructions.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{l2_norm, DenseMatrix};
use crate::oracle::rng::OracleRng;
use crate::scalar::Scalar;

pub fn gaussian_matrix<T: Scalar>(rng: &mut OracleRng, rows: usize, cols: usize) -> DenseMatrix<T> {
    let data = (0..rows * cols)
        .map(|_| T::lit(rng.sample::<f64, _>(StandardNormal)))
        .collect();
    DenseMatrix::new(rows, cols, data).expect("gaussian entries are finite")
}

pub fn uniform_matrix<T: Scalar>(
    rng: &mut OracleRng,
    rows: usize,
    cols: usize,
    lo: f64,
    hi: f64,
) -> DenseMatrix<T> {
    let data = (0..rows * cols).map(|_| T::lit(rng.gen_range(lo..hi))).collect();
    DenseMatrix::new(rows, cols, data).expect("uniform entries are finite")
}

/// Unit-Frobenius-norm matrix with uniformly distributed direction.
pub fn random_direction<T: Scalar>(rng: &mut OracleRng, rows: usize, cols: usize) -> DenseMatrix<T> {
    loop {
        let g = gaussian_matrix::<T>(rng, rows, cols);
        let n = g.frobenius_norm();
        if n > T::zero() {
            return g.scale(n.recip());
        }
    }
}

/// Orthonormalizes the columns of `a` by modified Gram–Schmidt applied
/// twice. Columns that collapse are replaced by fresh directions drawn from
/// the canonical basis.
pub fn orthonormalize<T: Scalar>(a: &DenseMatrix<T>) -> DenseMatrix<T> {
    let (m, k) = a.shape();
    assert!(k <= m, "cannot orthonormalize {k} columns in dimension {m}");
    let mut cols: Vec<Vec<T>> = Vec::with_capacity(k);
    for j in 0..k {
        let mut c = a.column(j);
        let original = l2_norm(&c);
        project_out(&mut c, &cols);
        let mut n = l2_norm(&c);
        if n <= T::lit(1e-8) * original.max(T::min_positive_value()) {
            let mut fallback = 0;
            loop {
                c = vec![T::zero(); m];
                c[fallback] = T::one();
                project_out(&mut c, &cols);
                n = l2_norm(&c);
                if n > T::lit(0.5) / T::lit(m as f64).sqrt() {
                    break;
                }
                fallback += 1;
            }
        }
        cols.push(c.into_iter().map(|x| x / n).collect());
    }
    let mut data = vec![T::zero(); m * k];
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            data[i * k + j] = x;
        }
    }
    DenseMatrix::new(m, k, data).expect("orthonormal columns are finite")
}

fn project_out<T: Scalar>(c: &mut [T], basis: &[Vec<T>]) {
    for _ in 0..2 {
        for b in basis {
            let p: T = b.iter().zip(c.iter()).map(|(&x, &y)| x * y).sum();
            for (x, &y) in c.iter_mut().zip(b) {
                *x = *x - p * y;
            }
        }
    }
}

/// Haar-like random orthogonal `n×n` matrix.
pub fn random_orthogonal<T: Scalar>(rng: &mut OracleRng, n: usize) -> DenseMatrix<T> {
    orthonormalize(&gaussian_matrix::<T>(rng, n, n))
}

/// `m×k` matrix with orthonormal columns.
pub fn random_orthonormal_columns<T: Scalar>(rng: &mut OracleRng, m: usize, k: usize) -> DenseMatrix<T> {
    orthonormalize(&gaussian_matrix::<T>(rng, m, k))
}

/// `Q₁·diag(spectrum)·Q₂ᵀ` with random orthonormal factors; rank equals the
/// number of nonzero entries of `spectrum`.
pub fn matrix_with_spectrum<T: Scalar>(
    rng: &mut OracleRng,
    rows: usize,
    cols: usize,
    spectrum: &[T],
) -> DenseMatrix<T> {
    let k = rows.min(cols);
    assert!(spectrum.len() <= k);
    let mut s = spectrum.to_vec();
    s.resize(k, T::zero());
    let left = random_orthonormal_columns::<T>(rng, rows, k);
    let right = random_orthonormal_columns::<T>(rng, cols, k);
    let scaled = left.matmul(&DenseMatrix::from_diag(&s).expect("finite")).expect("shapes");
    scaled.matmul(&right.transpose()).expect("shapes")
}

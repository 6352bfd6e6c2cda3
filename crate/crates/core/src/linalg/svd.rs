//! Thin singular value decomposition by one-sided (Hestenes) Jacobi.
//!
//! Column pairs of a working copy of the matrix are rotated until every pair
//! is numerically orthogonal; the column norms are then the singular values,
//! the normalized columns the left singular vectors, and the accumulated
//! rotations the right singular vectors. Wide matrices are factored through
//! their transpose.

use crate::error::{Error, Result};
use crate::linalg::matrix::{l2_norm, DenseMatrix};
use crate::scalar::Scalar;

/// Sweep budget before giving up with [`Error::Convergence`].
pub const MAX_SWEEPS: usize = 60;

/// `A = U·diag(σ)·Vᵀ` with `U: m×k`, `V: n×k`, `k = min(m, n)`.
///
/// `σ` is descending and nonnegative, and the largest-magnitude entry of every
/// column of `U` is nonnegative (first such entry on ties).
#[derive(Debug, Clone, PartialEq)]
pub struct SvdFactorization<T> {
    u: DenseMatrix<T>,
    sigma: Vec<T>,
    v: DenseMatrix<T>,
}

impl<T: Scalar> SvdFactorization<T> {
    pub fn u(&self) -> &DenseMatrix<T> {
        &self.u
    }

    pub fn sigma(&self) -> &[T] {
        &self.sigma
    }

    pub fn v(&self) -> &DenseMatrix<T> {
        &self.v
    }

    pub fn into_parts(self) -> (DenseMatrix<T>, Vec<T>, DenseMatrix<T>) {
        (self.u, self.sigma, self.v)
    }

    /// `U·diag(σ)·Vᵀ`.
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        self.assemble(&self.sigma)
    }

    /// `U·diag(s)·Vᵀ` for a replacement spectrum `s` of length `k`.
    ///
    /// # Panics
    /// If `s.len() != k`.
    pub fn assemble(&self, s: &[T]) -> DenseMatrix<T> {
        let k = self.sigma.len();
        assert_eq!(s.len(), k, "spectrum length must equal min(m, n)");
        let (m, n) = (self.u.rows(), self.v.rows());
        let mut data = vec![T::zero(); m * n];
        for i in 0..m {
            let row = &mut data[i * n..(i + 1) * n];
            for (l, &sl) in s.iter().enumerate() {
                let w = self.u.get(i, l) * sl;
                if w == T::zero() {
                    continue;
                }
                for (j, out) in row.iter_mut().enumerate() {
                    *out = *out + w * self.v.get(j, l);
                }
            }
        }
        // no negative zeros in assembled output
        for x in &mut data {
            *x = *x + T::zero();
        }
        DenseMatrix::from_raw(m, n, data)
    }

    pub fn nuclear_norm(&self) -> T {
        self.sigma.iter().copied().sum()
    }

    /// Number of singular values above `threshold`.
    pub fn rank(&self, threshold: T) -> usize {
        self.sigma.iter().filter(|&&s| s > threshold).count()
    }
}

/// Thin SVD of `a`.
pub fn svd<T: Scalar>(a: &DenseMatrix<T>) -> Result<SvdFactorization<T>> {
    let (mut u, sigma, mut v) = if a.rows() >= a.cols() {
        jacobi_tall(a)?
    } else {
        let (u, s, v) = jacobi_tall(&a.transpose())?;
        (v, s, u)
    };
    let k = sigma.len();
    for j in 0..k {
        if needs_flip(&u, j) {
            for i in 0..u.rows() {
                u.set(i, j, -u.get(i, j));
            }
            for i in 0..v.rows() {
                v.set(i, j, -v.get(i, j));
            }
        }
    }
    Ok(SvdFactorization { u, sigma, v })
}

fn needs_flip<T: Scalar>(u: &DenseMatrix<T>, j: usize) -> bool {
    let mut best = T::zero();
    let mut value = T::zero();
    for i in 0..u.rows() {
        let x = u.get(i, j);
        if x.abs() > best {
            best = x.abs();
            value = x;
        }
    }
    value < T::zero()
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |s, (&x, &y)| s + x * y)
}

type Parts<T> = (DenseMatrix<T>, Vec<T>, DenseMatrix<T>);

/// One-sided Jacobi on a matrix with `rows >= cols`.
fn jacobi_tall<T: Scalar>(a: &DenseMatrix<T>) -> Result<Parts<T>> {
    let (m, n) = a.shape();
    debug_assert!(m >= n);

    // Work on a copy scaled into [-1, 1] so squared column norms cannot overflow.
    let scale = a.as_slice().iter().fold(T::zero(), |s, x| s.max(x.abs()));
    let inv = if scale > T::zero() { scale.recip() } else { T::one() };
    let mut w: Vec<Vec<T>> = (0..n)
        .map(|j| a.column(j).into_iter().map(|x| x * inv).collect())
        .collect();
    let mut v: Vec<Vec<T>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { T::one() } else { T::zero() }).collect())
        .collect();

    let tol = T::jacobi_tolerance(m);
    let tiny = T::min_positive_value();
    let mut converged = false;
    let mut residual = T::zero();
    for _ in 0..MAX_SWEEPS {
        residual = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                let alpha = dot(&w[p], &w[p]);
                let beta = dot(&w[q], &w[q]);
                if alpha < tiny || beta < tiny {
                    continue;
                }
                let gamma = dot(&w[p], &w[q]);
                let off = gamma.abs() / alpha.sqrt() / beta.sqrt();
                residual = residual.max(off);
                if off <= tol {
                    continue;
                }
                let zeta = (beta - alpha) / (gamma + gamma);
                let t = zeta.signum() / (zeta.abs() + T::one().hypot(zeta));
                let c = (T::one() + t * t).sqrt().recip();
                let s = c * t;
                rotate(&mut w, p, q, c, s);
                rotate(&mut v, p, q, c, s);
            }
        }
        if residual <= tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence {
            sweeps: MAX_SWEEPS,
            residual: residual.as_f64(),
        });
    }

    let norms: Vec<T> = w
        .iter()
        .map(|col| {
            if dot(col, col) < tiny {
                T::zero()
            } else {
                l2_norm(col)
            }
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let mut u_cols: Vec<Vec<T>> = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    let mut v_out = DenseMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let s = norms[src];
        if s > T::zero() {
            u_cols.push(w[src].iter().map(|&x| x / s).collect());
        } else {
            let e = completion_vector(&u_cols, m);
            u_cols.push(e);
        }
        sigma.push(s * scale);
        for i in 0..n {
            v_out.set(i, dst, v[src][i]);
        }
    }
    let mut u = DenseMatrix::zeros(m, n);
    for (j, col) in u_cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            u.set(i, j, x);
        }
    }
    Ok((u, sigma, v_out))
}

fn rotate<T: Scalar>(cols: &mut [Vec<T>], p: usize, q: usize, c: T, s: T) {
    let (left, right) = cols.split_at_mut(q);
    let (cp, cq) = (&mut left[p], &mut right[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let (a, b) = (*x, *y);
        *x = c * a - s * b;
        *y = s * a + c * b;
    }
}

/// Unit vector orthogonal to every column in `basis`, built from the
/// canonical basis vector with the largest residual after two rounds of
/// Gram–Schmidt.
fn completion_vector<T: Scalar>(basis: &[Vec<T>], m: usize) -> Vec<T> {
    let mut best: Option<(T, Vec<T>)> = None;
    for k in 0..m {
        let mut e = vec![T::zero(); m];
        e[k] = T::one();
        for _ in 0..2 {
            for b in basis {
                let proj = dot(b, &e);
                for (x, &y) in e.iter_mut().zip(b) {
                    *x = *x - proj * y;
                }
            }
        }
        let norm = l2_norm(&e);
        if best.as_ref().is_none_or(|(n, _)| norm > *n) {
            best = Some((norm, e));
        }
    }
    let (norm, mut e) = best.expect("m > 0");
    for x in &mut e {
        *x = *x / norm;
    }
    e
}

impl<T: Scalar> DenseMatrix<T> {
    /// Sum of singular values.
    pub fn nuclear_norm(&self) -> Result<T> {
        Ok(svd(self)?.nuclear_norm())
    }

    /// Singular values, descending.
    pub fn singular_values(&self) -> Result<Vec<T>> {
        Ok(svd(self)?.sigma)
    }
}

/// Largest entry of `|QᵀQ − I|`.
pub fn orthonormality_residual<T: Scalar>(q: &DenseMatrix<T>) -> T {
    let k = q.cols();
    let mut worst = T::zero();
    for a in 0..k {
        for b in a..k {
            let d: T = (0..q.rows()).map(|i| q.get(i, a) * q.get(i, b)).sum();
            let target = if a == b { T::one() } else { T::zero() };
            worst = worst.max((d - target).abs());
        }
    }
    worst
}

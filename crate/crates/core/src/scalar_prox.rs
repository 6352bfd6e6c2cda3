//! Scalar shrinkage and the scalar keep-or-kill rule.
//!
//! `shrink(a, λ)` is the unique minimizer of `λ|x| + ½(x − a)²`, and
//! `hard_keep(v, β)` minimizes the one-entry cardinality problem
//! `[x ≠ 0] + (β/2)(x − v)²`. Every entry-wise and spectral operator in the
//! crate reduces to these two functions.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Threshold of the shrinkage function. Strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Lambda<T>(T);

impl<T: Scalar> Lambda<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_finite() && value > T::zero() {
            Ok(Lambda(value))
        } else {
            Err(Error::Domain(format!(
                "lambda must satisfy lambda > 0 and be finite, got {value}"
            )))
        }
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Balancing weight between the penalty and the squared distance.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Beta<T>(T);

impl<T: Scalar> Beta<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_finite() && value > T::zero() {
            Ok(Beta(value))
        } else {
            Err(Error::Domain(format!(
                "beta must satisfy beta > 0 and be finite, got {value}"
            )))
        }
    }

    pub fn value(self) -> T {
        self.0
    }

    /// The equivalent shrinkage threshold `1/β`.
    pub fn to_lambda(self) -> Result<Lambda<T>> {
        Lambda::new(T::one() / self.0)
    }
}

fn require_finite<T: Scalar>(name: &str, x: T) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {x}")))
    }
}

/// Soft threshold `sign(a)·max(|a| − λ, 0)`.
///
/// Never returns negative zero, so `shrink(-a) == -shrink(a)` holds exactly
/// under IEEE comparison.
pub fn shrink<T: Scalar>(a: T, lambda: Lambda<T>) -> Result<T> {
    require_finite("a", a)?;
    Ok(shrink_unchecked(a, lambda.0))
}

#[inline]
pub(crate) fn shrink_unchecked<T: Scalar>(a: T, lambda: T) -> T {
    let magnitude = (a.abs() - lambda).max(T::zero());
    if magnitude == T::zero() {
        T::zero()
    } else {
        a.signum() * magnitude
    }
}

/// `λ|x| + ½(x − a)²`.
pub fn scalar_objective<T: Scalar>(x: T, a: T, lambda: Lambda<T>) -> Result<T> {
    require_finite("x", x)?;
    require_finite("a", a)?;
    let d = x - a;
    Ok(lambda.0 * x.abs() + T::lit(0.5) * d * d)
}

/// Keeps `v` when `(β/2)·v² > 1`, otherwise returns 0; ties go to 0.
///
/// The comparison is evaluated as `|v| > sqrt(2/β)` so that a correctly
/// rounded boundary value such as `v = √2, β = 1` lands on the tie.
pub fn hard_keep<T: Scalar>(v: T, beta: Beta<T>) -> Result<T> {
    require_finite("v", v)?;
    Ok(hard_keep_unchecked(v, hard_threshold(beta)))
}

pub(crate) fn hard_threshold<T: Scalar>(beta: Beta<T>) -> T {
    (T::lit(2.0) / beta.0).sqrt()
}

#[inline]
pub(crate) fn hard_keep_unchecked<T: Scalar>(v: T, threshold: T) -> T {
    if v.abs() > threshold {
        v
    } else {
        T::zero()
    }
}

//! The floating-point element type every operator is generic over.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar: `f32` or `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Debug
    + Display
    + LowerExp
    + FromStr
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal; saturates to infinity when out of range.
    fn lit(x: f64) -> Self;

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Convergence threshold for the one-sided Jacobi sweep on columns of
    /// length `m`: `1e-14`, widened to `sqrt(m)·ε` where the precision cannot
    /// reach it.
    fn jacobi_tolerance(m: usize) -> Self {
        let floor = Self::lit(1e-14);
        let rounding = Self::epsilon() * Self::lit((m.max(1) as f64).sqrt());
        floor.max(rounding)
    }
}

impl Scalar for f32 {
    fn lit(x: f64) -> Self {
        x as f32
    }
}

impl Scalar for f64 {
    fn lit(x: f64) -> Self {
        x
    }
}

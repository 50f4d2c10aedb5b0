//! Scalar abstraction for the numeric kernels.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable throughout the crate: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + NumAssign + FromPrimitive + rustfft::FftNum + Sum<Self> + Display + Debug
{
    /// Lossless conversion from `f64` literals (tolerances, constants).
    fn c(value: f64) -> Self {
        Self::from_f64(value).expect("scalar conversion from f64")
    }

    /// Conversion from array/lattice sizes.
    fn from_len(value: usize) -> Self {
        Self::from_usize(value).expect("scalar conversion from usize")
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + NumAssign
        + FromPrimitive
        + rustfft::FftNum
        + Sum<Self>
        + Display
        + Debug
{
}

/// Squared Euclidean norm.
pub fn norm_sq<T: Scalar>(v: &[T]) -> T {
    v.iter().map(|&x| x * x).sum()
}

/// Euclidean norm.
pub fn norm<T: Scalar>(v: &[T]) -> T {
    norm_sq(v).sqrt()
}

/// Euclidean distance between two equal-length slices.
pub fn dist<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .sum::<T>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_and_norms() {
        let v = [3.0f64, 4.0];
        assert_eq!(norm(&v), 5.0);
        assert_eq!(norm_sq(&v), 25.0);
        assert_eq!(f32::c(0.5), 0.5f32);
        assert_eq!(f64::from_len(7), 7.0);
        assert_eq!(dist(&[1.0f64, 1.0], &[1.0, 2.0]), 1.0);
    }
}

//! Gabor coefficient array.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gabor::GaborParams;
use crate::scalar::Scalar;

/// Complex `M x N` coefficient array stored flat as `c[m + n M]`
/// (frequency-major within each frame).
#[derive(Debug, Clone, PartialEq)]
pub struct GaborCoefficients<T> {
    values: Vec<Complex<T>>,
    channels: usize,
    frames: usize,
}

impl<T: Scalar> GaborCoefficients<T> {
    pub fn zeros(channels: usize, frames: usize) -> Self {
        Self {
            values: vec![Complex::new(T::zero(), T::zero()); channels * frames],
            channels,
            frames,
        }
    }

    /// Wraps a flat `m + n M` buffer, checking the shape.
    pub fn from_flat(values: Vec<Complex<T>>, channels: usize, frames: usize) -> Result<Self> {
        if values.len() != channels * frames {
            return Err(Error::shape(
                "coefficient array",
                format!("{channels}x{frames}"),
                values.len().to_string(),
            ));
        }
        Ok(Self { values, channels, frames })
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn frames(&self) -> usize {
        self.frames
    }

    /// Checks that the shape matches the lattice `(M, N)`.
    pub fn check_shape(&self, params: &GaborParams) -> Result<()> {
        if self.channels != params.channels() || self.frames != params.time_shifts() {
            return Err(Error::shape(
                "coefficient array",
                format!("{}x{}", params.channels(), params.time_shifts()),
                format!("{}x{}", self.channels, self.frames),
            ));
        }
        Ok(())
    }

    pub fn get(&self, m: usize, n: usize) -> Complex<T> {
        self.values[m + n * self.channels]
    }

    pub fn set(&mut self, m: usize, n: usize, value: Complex<T>) {
        self.values[m + n * self.channels] = value;
    }

    /// Flat `c[m + n M]` view.
    pub fn flat(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn flat_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.values
    }

    /// Coefficients of frame `n` (all `M` channels).
    pub fn frame(&self, n: usize) -> &[Complex<T>] {
        &self.values[n * self.channels..(n + 1) * self.channels]
    }

    /// Squared Frobenius norm `‖c‖₂²`.
    pub fn norm_sq(&self) -> T {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Pointwise product with a real mask of the same shape.
    pub fn masked(&self, mask: &[T]) -> Result<Self> {
        if mask.len() != self.values.len() {
            return Err(Error::shape(
                "mask",
                self.values.len().to_string(),
                mask.len().to_string(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(mask)
            .map(|(z, &w)| Complex::new(z.re * w, z.im * w))
            .collect();
        Ok(Self { values, channels: self.channels, frames: self.frames })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_frequency_major() {
        let mut c = GaborCoefficients::<f64>::zeros(3, 2);
        c.set(1, 1, Complex::new(5.0, 0.0));
        assert_eq!(c.flat()[1 + 3].re, 5.0);
        assert_eq!(c.frame(1)[1].re, 5.0);
    }

    #[test]
    fn shape_checks() {
        let p = GaborParams::new(2, 3, 6).unwrap();
        let c = GaborCoefficients::<f64>::zeros(3, 3);
        assert!(c.check_shape(&p).is_ok());
        let c = GaborCoefficients::<f64>::zeros(3, 2);
        assert!(c.check_shape(&p).is_err());
        assert!(GaborCoefficients::<f64>::from_flat(vec![], 2, 2).is_err());
    }

    #[test]
    fn masking_scales_entries() {
        let mut c = GaborCoefficients::<f64>::zeros(2, 1);
        c.set(0, 0, Complex::new(2.0, -2.0));
        c.set(1, 0, Complex::new(1.0, 1.0));
        let m = c.masked(&[0.5, 0.0]).unwrap();
        assert_eq!(m.get(0, 0), Complex::new(1.0, -1.0));
        assert_eq!(m.get(1, 0), Complex::new(0.0, 0.0));
        assert!(c.masked(&[1.0]).is_err());
    }
}

//! Finite-support real window.

use crate::error::{Error, Result};
use crate::scalar::{norm_sq, Scalar};

/// Real window of support `K`, zero-extended to an ambient length `L` when
/// used in a transform. Samples outside `[0, K)` are implicitly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Window<T> {
    name: String,
    provenance: String,
    samples: Vec<T>,
    ambient_len: Option<usize>,
}

impl<T: Scalar> Window<T> {
    /// Validates: non-empty, all samples finite, energy strictly positive.
    pub fn new(name: impl Into<String>, samples: Vec<T>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidWindow("empty sample vector".into()));
        }
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidWindow("non-finite sample".into()));
        }
        if norm_sq(&samples) <= T::zero() {
            return Err(Error::InvalidWindow("zero energy".into()));
        }
        Ok(Self {
            name: name.into(),
            provenance: String::new(),
            samples,
            ambient_len: None,
        })
    }

    /// Pins the ambient length the window will be zero-extended into.
    pub fn with_ambient(mut self, l: usize) -> Result<Self> {
        if self.samples.len() > l {
            return Err(Error::InvalidWindow(format!(
                "support {} exceeds ambient length {}",
                self.samples.len(),
                l
            )));
        }
        self.ambient_len = Some(l);
        Ok(self)
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Support length `K`.
    pub fn support_len(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn ambient_len(&self) -> Option<usize> {
        self.ambient_len
    }

    /// Energy `‖g‖₂²`.
    pub fn energy(&self) -> T {
        norm_sq(&self.samples)
    }

    /// Zero-extension to length `l`. Errors when the support does not fit or
    /// when a previously pinned ambient length disagrees.
    pub fn embedded(&self, l: usize) -> Result<Vec<T>> {
        if let Some(pinned) = self.ambient_len {
            if pinned != l {
                return Err(Error::shape(
                    "window ambient length",
                    l.to_string(),
                    pinned.to_string(),
                ));
            }
        }
        if self.samples.len() > l {
            return Err(Error::shape(
                "window support",
                format!("<= {l}"),
                self.samples.len().to_string(),
            ));
        }
        let mut out = vec![T::zero(); l];
        out[..self.samples.len()].copy_from_slice(&self.samples);
        Ok(out)
    }

    /// Same window scaled by `factor`.
    pub fn scaled(&self, factor: T) -> Result<Self> {
        let mut w = self.clone();
        for x in &mut w.samples {
            *x *= factor;
        }
        if norm_sq(&w.samples) <= T::zero() {
            return Err(Error::InvalidWindow("zero energy after scaling".into()));
        }
        Ok(w)
    }

    /// Rebuilds the window from raw samples, keeping name and ambient length.
    /// Trailing exact zeros are kept; validation is re-run.
    pub fn replaced_samples(&self, samples: Vec<T>) -> Result<Self> {
        let mut w = Window::new(self.name.clone(), samples)?;
        w.provenance = self.provenance.clone();
        if let Some(l) = self.ambient_len {
            w = w.with_ambient(l)?;
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_samples() {
        assert!(Window::<f64>::new("w", vec![]).is_err());
        assert!(Window::new("w", vec![0.0, 0.0]).is_err());
        assert!(Window::new("w", vec![1.0, f64::NAN]).is_err());
        assert!(Window::new("w", vec![1.0, 0.5]).is_ok());
    }

    #[test]
    fn embedding_zero_extends() {
        let w = Window::new("w", vec![1.0, 2.0]).unwrap();
        assert_eq!(w.embedded(4).unwrap(), vec![1.0, 2.0, 0.0, 0.0]);
        assert!(w.embedded(1).is_err());
    }

    #[test]
    fn pinned_ambient_must_match() {
        let w = Window::new("w", vec![1.0, 2.0]).unwrap().with_ambient(4).unwrap();
        assert!(w.embedded(4).is_ok());
        assert!(w.embedded(8).is_err());
        assert!(Window::new("w", vec![1.0; 4]).unwrap().with_ambient(2).is_err());
    }

    #[test]
    fn energy_and_scaling() {
        let w = Window::new("w", vec![3.0, 4.0]).unwrap();
        assert_eq!(w.energy(), 25.0);
        let s = w.scaled(2.0).unwrap();
        assert_eq!(s.energy(), 100.0);
    }
}

//! Solver configuration.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Linearized ADMM parameters.
///
/// The step sizes must satisfy `0 < μ ≤ λ / ‖F̃‖²_op`; the padded DFT is an
/// isometry, so the bound reduces to `μ ≤ λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmmConfig<T> {
    /// Frequency-response slack `β ≥ 1`.
    pub beta: T,
    /// Primal step size.
    pub mu: T,
    /// Splitting step size.
    pub lambda: T,
    /// Iteration cap.
    pub max_iter: usize,
    /// Primal-residual stopping threshold `‖F̃g - z‖₂`; `None` resolves to
    /// `1e-8 √K̃` at solve time.
    pub tol_primal: Option<T>,
    /// Iterate-change stopping threshold `‖g⁺ - g‖₂`.
    pub tol_change: T,
}

impl<T: Scalar> AdmmConfig<T> {
    /// Default solver settings for a given slack: `μ = λ = 1`, 2000
    /// iterations, `tol_primal = 1e-8 √K̃`, `tol_change = 1e-10`.
    pub fn new(beta: T) -> Result<Self> {
        Self {
            beta,
            mu: T::one(),
            lambda: T::one(),
            max_iter: 2000,
            tol_primal: None,
            tol_change: T::c(1e-10),
        }
        .validated()
    }

    /// Checks every parameter range, including the step rule `μ ≤ λ`.
    pub fn validated(self) -> Result<Self> {
        if !(self.beta >= T::one()) {
            return Err(Error::invalid_param("beta", format!("{} < 1", self.beta)));
        }
        if !(self.mu > T::zero()) {
            return Err(Error::invalid_param("mu", "must be positive".to_string()));
        }
        if !(self.lambda > T::zero()) {
            return Err(Error::invalid_param("lambda", "must be positive".to_string()));
        }
        if self.mu > self.lambda {
            return Err(Error::invalid_param(
                "mu",
                format!(
                    "step rule violated: mu={} > lambda={} (the padded DFT has operator norm 1)",
                    self.mu, self.lambda
                ),
            ));
        }
        if self.max_iter == 0 {
            return Err(Error::invalid_param("max_iter", "must be at least 1".to_string()));
        }
        if let Some(tp) = self.tol_primal {
            if !(tp > T::zero()) {
                return Err(Error::invalid_param("tol_primal", "must be positive".to_string()));
            }
        }
        if !(self.tol_change > T::zero()) {
            return Err(Error::invalid_param("tol_change", "must be positive".to_string()));
        }
        Ok(self)
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Result<Self> {
        self.max_iter = max_iter;
        self.validated()
    }

    pub fn with_steps(mut self, mu: T, lambda: T) -> Result<Self> {
        self.mu = mu;
        self.lambda = lambda;
        self.validated()
    }

    /// Primal tolerance resolved against the spectrum length.
    pub fn resolved_tol_primal(&self, k_tilde: usize) -> T {
        self.tol_primal
            .unwrap_or_else(|| T::c(1e-8) * T::from_len(k_tilde).sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = AdmmConfig::<f64>::new(1.0).unwrap();
        assert_eq!(c.mu, 1.0);
        assert_eq!(c.lambda, 1.0);
        assert_eq!(c.max_iter, 2000);
        assert!((c.resolved_tol_primal(4096) - 1e-8 * 64.0).abs() < 1e-20);
    }

    #[test]
    fn rejects_step_rule_violation() {
        let c = AdmmConfig::<f64>::new(2.0).unwrap().with_steps(1.5, 1.0);
        assert!(c.is_err());
        assert!(AdmmConfig::<f64>::new(2.0).unwrap().with_steps(0.5, 1.0).is_ok());
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(AdmmConfig::<f64>::new(0.5).is_err());
        assert!(AdmmConfig::<f64>::new(1.0).unwrap().with_steps(0.0, 1.0).is_err());
        assert!(AdmmConfig::<f64>::new(1.0).unwrap().with_max_iter(0).is_err());
        let mut c = AdmmConfig::<f64>::new(1.0).unwrap();
        c.tol_change = 0.0;
        assert!(c.validated().is_err());
    }
}

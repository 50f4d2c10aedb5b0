//! Natural cubic spline interpolation.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Natural (zero second derivative at both ends) C² cubic spline through a
/// set of strictly increasing knots.
#[derive(Debug, Clone)]
pub struct NaturalCubicSpline<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    second_derivs: Vec<T>,
}

impl<T: Scalar> NaturalCubicSpline<T> {
    /// Fits the spline. Requires at least two knots with strictly
    /// increasing abscissae.
    pub fn fit(xs: Vec<T>, ys: Vec<T>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::shape("spline knots", xs.len().to_string(), ys.len().to_string()));
        }
        if xs.len() < 2 {
            return Err(Error::invalid_param("knots", "need at least 2 knots".to_string()));
        }
        if xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::invalid_param("knots", "abscissae must be strictly increasing".to_string()));
        }

        let n = xs.len();
        let mut y2 = vec![T::zero(); n];
        let mut u = vec![T::zero(); n - 1];
        // Tridiagonal forward sweep; natural boundary keeps y2[0] = y2[n-1] = 0.
        for i in 1..n - 1 {
            let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
            let p = sig * y2[i - 1] + T::c(2.0);
            y2[i] = (sig - T::one()) / p;
            let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                - (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            u[i] = (T::c(6.0) * d / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
        }
        for k in (1..n - 1).rev() {
            y2[k] = y2[k] * y2[k + 1] + u[k];
        }
        Ok(Self { xs, ys, second_derivs: y2 })
    }

    /// Evaluates at `x`; outside the knot range the boundary polynomial is
    /// extrapolated.
    pub fn eval(&self, x: T) -> T {
        let n = self.xs.len();
        let mut lo = 0;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xs[mid] > x {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let h = self.xs[hi] - self.xs[lo];
        let a = (self.xs[hi] - x) / h;
        let b = (x - self.xs[lo]) / h;
        a * self.ys[lo]
            + b * self.ys[hi]
            + ((a * a * a - a) * self.second_derivs[lo]
                + (b * b * b - b) * self.second_derivs[hi])
                * h
                * h
                / T::c(6.0)
    }
}

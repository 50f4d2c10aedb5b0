//! Wiener gain masks: oracle power ratio and decision-directed recursion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gabor::GaborCoefficients;
use crate::scalar::Scalar;

/// Which mask the pipeline applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaskKind {
    /// Power ratio of oracle clean and noise coefficients.
    IdealWiener,
    /// Decision-directed a-priori SNR recursion from noisy coefficients and
    /// a per-channel noise PSD estimate.
    DdWiener,
}

impl MaskKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MaskKind::IdealWiener => "ideal_wiener",
            MaskKind::DdWiener => "dd_wiener",
        }
    }
}

/// Source of the per-channel noise PSD for the decision-directed mask.
/// These modes stand in for a full model-based noise-power estimator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoisePsdMode<T> {
    /// True per-channel noise power from the oracle noise signal.
    Oracle,
    /// Mean periodogram of the first 8 frames of the noisy coefficients.
    FirstFrames,
    /// User-supplied per-channel PSD of length `M`.
    Supplied(Vec<T>),
}

/// Mask selection plus its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaskSpec<T> {
    pub kind: MaskKind,
    /// Decision-directed smoothing in `[0, 1)`; only used by `DdWiener`.
    pub dd_alpha: T,
    pub noise_psd_mode: NoisePsdMode<T>,
}

impl<T: Scalar> MaskSpec<T> {
    pub fn ideal() -> Self {
        Self {
            kind: MaskKind::IdealWiener,
            dd_alpha: T::c(0.98),
            noise_psd_mode: NoisePsdMode::Oracle,
        }
    }

    pub fn decision_directed(dd_alpha: T, noise_psd_mode: NoisePsdMode<T>) -> Result<Self> {
        if !(dd_alpha >= T::zero() && dd_alpha < T::one()) {
            return Err(Error::invalid_param("dd_alpha", format!("{dd_alpha} outside [0, 1)")));
        }
        Ok(Self { kind: MaskKind::DdWiener, dd_alpha, noise_psd_mode })
    }
}

/// Oracle Wiener mask `|c_clean|² / (|c_clean|² + |c_noise|²)` with the
/// `0/0 → 0` convention. Values lie in `[0, 1]`.
pub fn ideal_wiener_mask<T: Scalar>(
    c_clean: &GaborCoefficients<T>,
    c_noise: &GaborCoefficients<T>,
) -> Result<Vec<T>> {
    if c_clean.channels() != c_noise.channels() || c_clean.frames() != c_noise.frames() {
        return Err(Error::shape(
            "mask operands",
            format!("{}x{}", c_clean.channels(), c_clean.frames()),
            format!("{}x{}", c_noise.channels(), c_noise.frames()),
        ));
    }
    Ok(c_clean
        .flat()
        .iter()
        .zip(c_noise.flat())
        .map(|(s, n)| {
            let ps = s.norm_sqr();
            let pn = n.norm_sqr();
            let denom = ps + pn;
            if denom > T::zero() {
                ps / denom
            } else {
                T::zero()
            }
        })
        .collect())
}

/// Decision-directed Wiener mask.
///
/// Per channel `m` and frame `n`, the a-priori SNR is
/// `ξ[m,n] = α G[m,n-1]² |c[m,n-1]|² / psd[m] + (1-α) max(|c[m,n]|²/psd[m] - 1, 0)`
/// with no prior term in the first frame, and the gain is `G = ξ/(1+ξ)`.
/// Values lie in `[0, 1)`.
pub fn dd_wiener_mask<T: Scalar>(
    c_noisy: &GaborCoefficients<T>,
    noise_psd: &[T],
    dd_alpha: T,
) -> Result<Vec<T>> {
    let channels = c_noisy.channels();
    if noise_psd.len() != channels {
        return Err(Error::shape("noise PSD", channels.to_string(), noise_psd.len().to_string()));
    }
    if noise_psd.iter().any(|&p| !(p > T::zero())) {
        return Err(Error::invalid_param("noise_psd", "all channel powers must be positive".to_string()));
    }
    if !(dd_alpha >= T::zero() && dd_alpha < T::one()) {
        return Err(Error::invalid_param("dd_alpha", format!("{dd_alpha} outside [0, 1)")));
    }

    let frames = c_noisy.frames();
    let mut mask = vec![T::zero(); channels * frames];
    let mut prev_gain_power = vec![T::zero(); channels]; // G² |c|² of the previous frame
    for n in 0..frames {
        for m in 0..channels {
            let power = c_noisy.get(m, n).norm_sqr();
            let posterior = power / noise_psd[m];
            let instantaneous = (posterior - T::one()).max(T::zero());
            let xi = dd_alpha * (prev_gain_power[m] / noise_psd[m])
                + (T::one() - dd_alpha) * instantaneous;
            let gain = xi / (T::one() + xi);
            mask[m + n * channels] = gain;
            prev_gain_power[m] = gain * gain * power;
        }
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn coeffs(values: &[(f64, f64)], channels: usize, frames: usize) -> GaborCoefficients<f64> {
        let flat = values.iter().map(|&(re, im)| Complex::new(re, im)).collect();
        GaborCoefficients::from_flat(flat, channels, frames).unwrap()
    }

    #[test]
    fn ideal_mask_limits() {
        let clean = coeffs(&[(2.0, 0.0), (0.0, 0.0), (1.0, 1.0)], 3, 1);
        let zero = coeffs(&[(0.0, 0.0); 3], 3, 1);
        let mask = ideal_wiener_mask(&clean, &zero).unwrap();
        assert_eq!(mask, vec![1.0, 0.0, 1.0]); // noiseless: 1 wherever clean is nonzero
        let mask = ideal_wiener_mask(&zero, &clean).unwrap();
        assert_eq!(mask, vec![0.0, 0.0, 0.0]);
        // Equal powers give exactly one half.
        let a = coeffs(&[(1.0, 0.0)], 1, 1);
        let b = coeffs(&[(0.0, -1.0)], 1, 1);
        assert_eq!(ideal_wiener_mask(&a, &b).unwrap(), vec![0.5]);
        // Shape mismatch.
        assert!(ideal_wiener_mask(&a, &zero).is_err());
    }

    #[test]
    fn dd_mask_first_frame_at_unit_posterior_is_zero() {
        // |c|² = psd and α = 0: posterior 1, instantaneous SNR 0, gain 0.
        let c = coeffs(&[(1.0, 0.0), (0.0, 1.0)], 2, 1);
        let mask = dd_wiener_mask(&c, &[1.0, 1.0], 0.0).unwrap();
        assert_eq!(mask, vec![0.0, 0.0]);
    }

    #[test]
    fn dd_mask_tiny_psd_approaches_one() {
        let c = coeffs(&[(1.0, 0.0)], 1, 1);
        let mask = dd_wiener_mask(&c, &[1e-12], 0.5).unwrap();
        assert!(mask[0] > 1.0 - 1e-10);
        assert!(mask[0] < 1.0);
    }

    #[test]
    fn dd_mask_validates_inputs() {
        let c = coeffs(&[(1.0, 0.0)], 1, 1);
        assert!(dd_wiener_mask(&c, &[0.0], 0.5).is_err());
        assert!(dd_wiener_mask(&c, &[1.0, 1.0], 0.5).is_err());
        assert!(dd_wiener_mask(&c, &[1.0], 1.0).is_err());
        assert!(MaskSpec::decision_directed(1.0, NoisePsdMode::<f64>::Oracle).is_err());
    }

    #[test]
    fn dd_mask_recursion_carries_previous_gain() {
        // Strong first frame, weak second: with α close to 1 the second
        // frame inherits a high a-priori SNR and keeps a high gain.
        let c = coeffs(&[(10.0, 0.0), (1.0, 0.0)], 1, 2);
        let carried = dd_wiener_mask(&c, &[1.0], 0.9).unwrap();
        let memoryless = dd_wiener_mask(&c, &[1.0], 0.0).unwrap();
        assert!(carried[1] > memoryless[1]);
    }
}

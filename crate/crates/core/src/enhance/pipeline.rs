//! Analysis → mask → synthesis pipeline.

use crate::enhance::{dd_wiener_mask, ideal_wiener_mask, MaskKind, MaskSpec, NoisePsdMode, NoisyPair};
use crate::error::{Error, Result};
use crate::gabor::{canonical_dual, dgt, idgt, GaborCoefficients, GaborParams, Window};
use crate::scalar::Scalar;

/// True per-channel noise power: mean `|c_noise[m,·]|²` across frames.
pub fn noise_psd_oracle<T: Scalar>(c_noise: &GaborCoefficients<T>) -> Vec<T> {
    per_channel_mean_power(c_noise, c_noise.frames())
}

/// Mean periodogram of the first `frames` frames, per channel.
fn per_channel_mean_power<T: Scalar>(c: &GaborCoefficients<T>, frames: usize) -> Vec<T> {
    let frames = frames.min(c.frames()).max(1);
    let scale = T::one() / T::from_len(frames);
    (0..c.channels())
        .map(|m| {
            let sum: T = (0..frames).map(|n| c.get(m, n).norm_sqr()).sum();
            sum * scale
        })
        .collect()
}

/// Floor applied to estimated noise PSDs so channels where the estimate
/// vanishes stay usable.
fn floored<T: Scalar>(psd: Vec<T>) -> Vec<T> {
    let peak = psd.iter().cloned().fold(T::zero(), T::max);
    let floor = (T::c(1e-12) * peak).max(T::min_positive_value());
    psd.into_iter().map(|p| p.max(floor)).collect()
}

/// Enhances the noisy signal: analysis with `g`, Wiener mask per
/// [`MaskSpec`], synthesis with the canonical dual of `g`. Oracle masks use
/// the DGT of the clean and noise parts under the same window.
pub fn enhance<T: Scalar>(
    pair: &NoisyPair<T>,
    window: &Window<T>,
    params: &GaborParams,
    spec: &MaskSpec<T>,
) -> Result<Vec<T>> {
    let c_noisy = dgt(&pair.noisy, window, params)?;
    let mask = match spec.kind {
        MaskKind::IdealWiener => {
            let c_clean = dgt(&pair.clean, window, params)?;
            let c_noise = dgt(&pair.noise, window, params)?;
            ideal_wiener_mask(&c_clean, &c_noise)?
        }
        MaskKind::DdWiener => {
            let psd = match &spec.noise_psd_mode {
                NoisePsdMode::Oracle => {
                    let c_noise = dgt(&pair.noise, window, params)?;
                    floored(noise_psd_oracle(&c_noise))
                }
                NoisePsdMode::FirstFrames => floored(per_channel_mean_power(&c_noisy, 8)),
                NoisePsdMode::Supplied(psd) => {
                    if psd.len() != params.channels() {
                        return Err(Error::shape(
                            "supplied noise PSD",
                            params.channels().to_string(),
                            psd.len().to_string(),
                        ));
                    }
                    psd.clone()
                }
            };
            dd_wiener_mask(&c_noisy, &psd, spec.dd_alpha)?
        }
    };
    let masked = c_noisy.masked(&mask)?;
    let dual = canonical_dual(window, params)?;
    idgt(&masked, &dual, params)
}

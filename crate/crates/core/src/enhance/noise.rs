//! Seeded Gaussian noise at an exact SNR, and the SNR metric itself.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::scalar::{norm_sq, Scalar};

/// Clean/noisy/noise triple with `noisy = clean + noise` exactly.
#[derive(Debug, Clone)]
pub struct NoisyPair<T> {
    pub clean: Vec<T>,
    pub noisy: Vec<T>,
    pub noise: Vec<T>,
    pub target_snr_db: T,
    pub seed: u64,
}

/// Draws Gaussian noise from a seeded generator and rescales it (never
/// redraws) so that `10 log₁₀(‖f‖²/‖n‖²)` equals `snr_db` exactly.
pub fn add_noise_at_snr<T: Scalar>(signal: &[T], snr_db: T, seed: u64) -> Result<NoisyPair<T>> {
    let signal_energy = norm_sq(signal);
    if !(signal_energy > T::zero()) {
        return Err(Error::invalid_param("signal", "zero signal cannot carry an SNR".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Sampling in f64 keeps the stream identical for every scalar type.
    let mut noise: Vec<T> = (0..signal.len())
        .map(|_| T::c(<StandardNormal as Distribution<f64>>::sample(&StandardNormal, &mut rng)))
        .collect();
    let target_energy = signal_energy * T::c(10.0).powf(-snr_db / T::c(10.0));
    let factor = (target_energy / norm_sq(&noise)).sqrt();
    for n in &mut noise {
        *n *= factor;
    }
    let noisy = signal.iter().zip(&noise).map(|(&s, &n)| s + n).collect();
    Ok(NoisyPair { clean: signal.to_vec(), noisy, noise, target_snr_db: snr_db, seed })
}

/// `10 log₁₀(‖reference‖² / ‖reference - estimate‖²)`. A zero residual
/// returns the `+∞` sentinel.
pub fn snr_db<T: Scalar>(reference: &[T], estimate: &[T]) -> Result<T> {
    if reference.len() != estimate.len() {
        return Err(Error::shape(
            "snr operands",
            reference.len().to_string(),
            estimate.len().to_string(),
        ));
    }
    let ref_energy = norm_sq(reference);
    if !(ref_energy > T::zero()) {
        return Err(Error::invalid_param("reference", "zero reference signal".to_string()));
    }
    let residual: T = reference
        .iter()
        .zip(estimate)
        .map(|(&r, &e)| (r - e) * (r - e))
        .sum();
    if residual == T::zero() {
        return Ok(T::infinity());
    }
    Ok(T::c(10.0) * (ref_energy / residual).log10())
}

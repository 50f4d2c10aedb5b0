//! Zero-padded unitary-normalized DFT of a finite-support window.

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::gabor::Window;
use crate::scalar::Scalar;

/// Additive magnitude floor used before taking logarithms; maps exact zeros
/// to -240 dB.
pub const DB_FLOOR: f64 = 1e-12;

/// Zero-padded DFT `(F̃ g)[m] = (1/√K̃) Σ_n g[n] e^{-i 2π m n / K̃}`.
///
/// The `1/√K̃` normalization makes `F̃* F̃` the identity on length-`K`
/// vectors, so the map is an isometry and its operator norm is 1.
pub fn zero_pad_dft<T: Scalar>(window: &Window<T>, k_tilde: usize) -> Result<Vec<Complex<T>>> {
    let k = window.support_len();
    if k_tilde < k {
        return Err(Error::invalid_param(
            "K_tilde",
            format!("padded length {k_tilde} is shorter than the window support {k}"),
        ));
    }
    Ok(padded_dft(window.samples(), k_tilde))
}

/// Same transform on a raw sample slice; `samples.len() <= k_tilde` must hold.
pub(crate) fn padded_dft<T: Scalar>(samples: &[T], k_tilde: usize) -> Vec<Complex<T>> {
    debug_assert!(samples.len() <= k_tilde);
    let mut buf = vec![Complex::new(T::zero(), T::zero()); k_tilde];
    for (b, &s) in buf.iter_mut().zip(samples) {
        b.re = s;
    }
    FftPlanner::new().plan_fft_forward(k_tilde).process(&mut buf);
    let scale = T::one() / T::from_len(k_tilde).sqrt();
    for b in &mut buf {
        b.re *= scale;
        b.im *= scale;
    }
    buf
}

/// Adjoint `(F̃* z)[n] = (1/√K̃) Σ_m z[m] e^{+i 2π m n / K̃}`, truncated to
/// the first `k` entries. Complex output; callers in the real pipeline take
/// the real part after checking the imaginary residue.
pub fn zero_pad_dft_adjoint<T: Scalar>(spectrum: &[Complex<T>], k: usize) -> Result<Vec<Complex<T>>> {
    let k_tilde = spectrum.len();
    if k > k_tilde {
        return Err(Error::invalid_param(
            "k",
            format!("truncation length {k} exceeds spectrum length {k_tilde}"),
        ));
    }
    let mut buf = spectrum.to_vec();
    FftPlanner::new().plan_fft_inverse(k_tilde).process(&mut buf);
    let scale = T::one() / T::from_len(k_tilde).sqrt();
    buf.truncate(k);
    for b in &mut buf {
        b.re *= scale;
        b.im *= scale;
    }
    Ok(buf)
}

/// dB magnitude `20 log₁₀(|z| + DB_FLOOR)` of a complex spectrum.
pub fn magnitude_db<T: Scalar>(spectrum: &[Complex<T>]) -> Vec<T> {
    let floor = T::c(DB_FLOOR);
    let twenty = T::c(20.0);
    spectrum
        .iter()
        .map(|z| twenty * (z.norm() + floor).log10())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::norm;

    #[test]
    fn impulse_spectrum_is_flat() {
        let g = Window::<f64>::new("delta", vec![1.0]).unwrap();
        let spec = zero_pad_dft(&g, 8).unwrap();
        let expect = 1.0 / 8.0f64.sqrt();
        for z in &spec {
            assert!((z.re - expect).abs() < 1e-15 && z.im.abs() < 1e-15);
        }
    }

    #[test]
    fn two_ones_padded_to_four() {
        // (1/2)[2, 1-i, 0, 1+i]
        let g = Window::<f64>::new("g", vec![1.0, 1.0]).unwrap();
        let spec = zero_pad_dft(&g, 4).unwrap();
        let expect = [(1.0, 0.0), (0.5, -0.5), (0.0, 0.0), (0.5, 0.5)];
        for (z, (re, im)) in spec.iter().zip(expect) {
            assert!((z.re - re).abs() < 1e-15, "{z}");
            assert!((z.im - im).abs() < 1e-15, "{z}");
        }
    }

    #[test]
    fn rejects_short_padding() {
        let g = Window::<f64>::new("g", vec![1.0, 1.0, 1.0]).unwrap();
        assert!(zero_pad_dft(&g, 2).is_err());
        assert!(zero_pad_dft(&g, 3).is_ok());
    }

    #[test]
    fn isometry() {
        let samples = vec![0.3, -0.8, 1.0, 0.44, -0.17];
        let g = Window::<f64>::new("g", samples.clone()).unwrap();
        let spec = zero_pad_dft(&g, 32).unwrap();
        let spectral_norm: f64 = spec.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((spectral_norm - norm(&samples)).abs() < 1e-12);
    }

    #[test]
    fn adjoint_inverts_on_the_support() {
        // F̃*F̃ = identity on length-K vectors.
        let samples = vec![0.3, -0.8, 1.0, 0.44, -0.17];
        let g = Window::<f64>::new("g", samples.clone()).unwrap();
        let spec = zero_pad_dft(&g, 16).unwrap();
        let back = zero_pad_dft_adjoint(&spec, 5).unwrap();
        for (z, &s) in back.iter().zip(&samples) {
            assert!((z.re - s).abs() < 1e-13 && z.im.abs() < 1e-13);
        }
        assert!(zero_pad_dft_adjoint(&spec, 17).is_err());
    }

    #[test]
    fn db_values() {
        let spec = [
            Complex::new(1.0f64, 0.0),
            Complex::new(0.0, 0.1),
            Complex::new(0.0, 0.0),
        ];
        let db = magnitude_db(&spec);
        assert!(db[0].abs() < 1e-9);
        assert!((db[1] + 20.0).abs() < 1e-9);
        assert!((db[2] + 240.0).abs() < 1e-9);
    }
}

//! Analysis and synthesis transforms.

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::gabor::{GaborCoefficients, GaborParams, Window};
use crate::scalar::Scalar;

/// Discrete Gabor transform of a real signal.
///
/// `c[m + n M] = Σ_l f[l] g[(l - a n) mod L] exp(-i 2π m l / M)` with the
/// unnormalized forward DFT kernel. Each frame is computed by folding the
/// windowed segment to length `M` and applying one length-`M` DFT, which is
/// valid because the modulation is `M`-periodic in `l`.
pub fn dgt<T: Scalar>(
    signal: &[T],
    window: &Window<T>,
    params: &GaborParams,
) -> Result<GaborCoefficients<T>> {
    let l = params.signal_len();
    if signal.len() != l {
        return Err(Error::shape("signal", l.to_string(), signal.len().to_string()));
    }
    window.embedded(l)?; // validates support and pinned ambient length
    let m = params.channels();
    let n = params.time_shifts();
    let a = params.hop();
    let g = window.samples();

    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(m);

    let mut out = GaborCoefficients::zeros(m, n);
    let mut folded = vec![Complex::new(T::zero(), T::zero()); m];
    for frame in 0..n {
        for x in &mut folded {
            *x = Complex::new(T::zero(), T::zero());
        }
        let start = a * frame;
        for (k, &gk) in g.iter().enumerate() {
            let pos = (start + k) % l;
            folded[pos % m].re += signal[pos] * gk;
        }
        fft.process(&mut folded);
        out.flat_mut()[frame * m..(frame + 1) * m].copy_from_slice(&folded);
    }
    Ok(out)
}

/// Synthesis `Σ_{m,n} c[m + n M] h_{m,n}` with window `h`, kept complex.
pub fn idgt_complex<T: Scalar>(
    coeffs: &GaborCoefficients<T>,
    window: &Window<T>,
    params: &GaborParams,
) -> Result<Vec<Complex<T>>> {
    coeffs.check_shape(params)?;
    let l = params.signal_len();
    window.embedded(l)?;
    let m = params.channels();
    let a = params.hop();
    let h = window.samples();

    let mut planner = FftPlanner::new();
    let ifft = planner.plan_fft_inverse(m); // unnormalized Σ_m c[m] e^{+i2πmr/M}

    let mut out = vec![Complex::new(T::zero(), T::zero()); l];
    let mut spectrum = vec![Complex::new(T::zero(), T::zero()); m];
    for frame in 0..params.time_shifts() {
        spectrum.copy_from_slice(coeffs.frame(frame));
        ifft.process(&mut spectrum);
        let start = a * frame;
        for (k, &hk) in h.iter().enumerate() {
            let pos = (start + k) % l;
            let s = spectrum[pos % m];
            out[pos].re += hk * s.re;
            out[pos].im += hk * s.im;
        }
    }
    Ok(out)
}

/// Inverse DGT for the real-signal pipeline: synthesizes with `h` and takes
/// the real part. The discarded imaginary residue must be negligible
/// (≤ 1e-8 of the result norm), which holds whenever the coefficients are
/// conjugate-symmetric across channels, e.g. masked coefficients of a real
/// signal.
pub fn idgt<T: Scalar>(
    coeffs: &GaborCoefficients<T>,
    window: &Window<T>,
    params: &GaborParams,
) -> Result<Vec<T>> {
    let full = idgt_complex(coeffs, window, params)?;
    let total: T = full.iter().map(|z| z.norm_sqr()).sum();
    let imag: T = full.iter().map(|z| z.im * z.im).sum();
    if imag.sqrt() > T::c(1e-8) * total.sqrt() {
        return Err(Error::invalid_param(
            "coefficients",
            format!(
                "imaginary residue {:.3e} exceeds 1e-8 of result norm {:.3e}; \
                 coefficients are not conjugate-symmetric",
                imag.sqrt().to_f64().unwrap_or(f64::NAN),
                total.sqrt().to_f64().unwrap_or(f64::NAN),
            ),
        ));
    }
    Ok(full.into_iter().map(|z| z.re).collect())
}

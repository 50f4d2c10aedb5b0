//! Standard window families and energy normalization.

use crate::error::{Error, Result};
use crate::gabor::{GaborParams, Window};
use crate::scalar::Scalar;

fn check_support(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::invalid_param("K", format!("window support {k} must be at least 2")));
    }
    Ok(())
}

/// Hann window on `K` points, sampled at half-integer offsets
/// `g[l] = sin²(π (l + 1/2) / K)` so the window is strictly positive and
/// symmetric (`g[l] = g[K-1-l]`) while keeping the period-`K` raised-cosine
/// profile.
pub fn hann_window<T: Scalar>(k: usize) -> Result<Window<T>> {
    check_support(k)?;
    let kf = T::from_len(k);
    let mut samples = vec![T::zero(); k];
    // Filling by mirroring keeps g[l] = g[K-1-l] exact.
    for l in 0..k.div_ceil(2) {
        let phase = T::PI() * (T::from_len(l) + T::c(0.5)) / kf;
        let s = phase.sin();
        samples[l] = s * s;
        samples[k - 1 - l] = s * s;
    }
    Ok(Window::new(format!("hann{k}"), samples)?.with_provenance(format!("hann K={k}")))
}

/// Kaiser window on `K` points with shape parameter `alpha`:
/// `g[l] = I₀(π α √(1 - r²)) / I₀(π α)` with `r = (2l - (K-1)) / (K-1)`.
/// `alpha = 0` gives the rectangular window.
pub fn kaiser_window<T: Scalar>(k: usize, alpha: T) -> Result<Window<T>> {
    check_support(k)?;
    if alpha < T::zero() {
        return Err(Error::invalid_param("alpha", "must be nonnegative".to_string()));
    }
    let beta = T::PI() * alpha;
    let denom = bessel_i0(beta);
    let half = T::c(0.5) * T::from_len(k - 1);
    let samples = (0..k)
        .map(|l| {
            let r = (T::from_len(l) - half) / half;
            bessel_i0(beta * (T::one() - r * r).max(T::zero()).sqrt()) / denom
        })
        .collect();
    Ok(Window::new(format!("kaiser{k}"), samples)?
        .with_provenance(format!("kaiser K={k} alpha={alpha}")))
}

/// All-ones window on `K` points.
pub fn rectangular_window<T: Scalar>(k: usize) -> Result<Window<T>> {
    check_support(k)?;
    Ok(Window::new(format!("rect{k}"), vec![T::one(); k])?
        .with_provenance(format!("rectangular K={k}")))
}

/// Zeroth-order modified Bessel function of the first kind, by power series.
/// Converges quickly for the arguments reached by practical shape
/// parameters (πα ≲ 100).
fn bessel_i0<T: Scalar>(x: T) -> T {
    let half_x = x * T::c(0.5);
    let mut term = T::one();
    let mut sum = T::one();
    let mut k = T::one();
    loop {
        let factor = half_x / k;
        term = term * factor * factor;
        sum += term;
        if term <= sum * T::epsilon() {
            break;
        }
        k += T::one();
    }
    sum
}

/// Rescales the window so its energy is exactly `a/M`, the normalization
/// under which a Parseval tight window has the same energy.
pub fn normalize_energy<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<Window<T>> {
    let target = T::from_len(params.hop()) / T::from_len(params.channels());
    let factor = (target / window.energy()).sqrt();
    window.scaled(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{magnitude_db, zero_pad_dft};

    #[test]
    fn hann_is_symmetric_and_positive() {
        for k in [2usize, 4, 5, 256] {
            let w = hann_window::<f64>(k).unwrap();
            let s = w.samples();
            for l in 0..k {
                assert_eq!(s[l], s[k - 1 - l], "symmetry at K={k}, l={l}");
                assert!(s[l] > 0.0);
            }
        }
        assert!(hann_window::<f64>(1).is_err());
    }

    #[test]
    fn kaiser_zero_alpha_is_rectangular() {
        let w = kaiser_window::<f64>(8, 0.0).unwrap();
        for &s in w.samples() {
            assert!((s - 1.0).abs() < 1e-15);
        }
        assert!(kaiser_window::<f64>(8, -1.0).is_err());
    }

    #[test]
    fn kaiser_main_lobe_dominates_sidelobes() {
        let w = kaiser_window::<f64>(256, 10.0).unwrap();
        let spec = zero_pad_dft(&w, 4096).unwrap();
        let mags: Vec<f64> = spec.iter().map(|z| z.norm()).collect();
        // First spectral minimum marks the end of the main lobe.
        let mut first_min = 1;
        while first_min + 1 < 2048 && mags[first_min + 1] < mags[first_min] {
            first_min += 1;
        }
        let peak = mags[0];
        for &m in &mags[first_min..2048] {
            assert!(peak > m, "main lobe must dominate sidelobes");
        }
        // And the attenuation is deep for alpha = 10.
        let db = magnitude_db(&spec);
        let sidelobe_max = db[first_min..2048].iter().cloned().fold(f64::MIN, f64::max);
        assert!(db[0] - sidelobe_max > 60.0, "got {}", db[0] - sidelobe_max);
    }

    #[test]
    fn bessel_i0_reference_values() {
        // Abramowitz & Stegun: I0(1) = 1.2660658..., I0(5) = 27.239871...
        let v: f64 = bessel_i0(1.0f64);
        assert!((v - 1.2660658777520084).abs() < 1e-12);
        let v: f64 = bessel_i0(5.0f64);
        assert!((v - 27.239871823604442).abs() < 1e-10);
        assert_eq!(bessel_i0(0.0f64), 1.0f64);
    }

    #[test]
    fn energy_normalization_hits_target_exactly() {
        let p = GaborParams::new(128, 256, 512).unwrap();
        let w = hann_window::<f64>(256).unwrap();
        let n = normalize_energy(&w, &p).unwrap();
        assert!((n.energy() - 0.5).abs() < 1e-14);
        // Idempotent.
        let n2 = normalize_energy(&n, &p).unwrap();
        for (a, b) in n.samples().iter().zip(n2.samples()) {
            assert!((a - b).abs() < 1e-15);
        }
    }
}

//! Closed-form proximal operators of the design objective.

use num_complex::Complex;

use crate::error::Result;
use crate::gabor::{canonical_tight, GaborParams, Window};
use crate::scalar::Scalar;
use crate::spectral::FrequencyEnvelope;

/// Proximal map of `(μ/2) d²_T`: the convex combination
/// `g/(1+μ) + μ/(1+μ) S_g^{-1/2} g` of the window with its canonical tight
/// window. The result is truncated back to the support `K`; see
/// [`prox_tight_distance_detailed`] for the energy lost by truncation.
pub fn prox_tight_distance<T: Scalar>(
    g: &[T],
    mu: T,
    params: &GaborParams,
) -> Result<Vec<T>> {
    prox_tight_distance_detailed(g, mu, params).map(|(out, _)| out)
}

/// Same map, also reporting the energy of the untruncated combination that
/// fell outside the support. The canonical tight window of a support-`K`
/// window can leak beyond `K` only when `K > M`; painless configurations
/// leak nothing.
pub fn prox_tight_distance_detailed<T: Scalar>(
    g: &[T],
    mu: T,
    params: &GaborParams,
) -> Result<(Vec<T>, T)> {
    let k = g.len();
    let window = Window::new("prox-iterate", g.to_vec())?;
    let tight = canonical_tight(&window, params)?;
    let tight_full = tight.embedded(params.signal_len())?;

    let w_g = T::one() / (T::one() + mu);
    let w_t = mu / (T::one() + mu);
    let out: Vec<T> = (0..k).map(|l| w_g * g[l] + w_t * tight_full[l]).collect();
    let leaked: T = tight_full[k..].iter().map(|&x| (w_t * x) * (w_t * x)).sum();
    Ok((out, leaked))
}

/// Proximal map of the ceiling indicator: per-bin radial projection
/// `min(β d[n] / |z[n]|, 1) · z[n]` onto the disc of radius `β d[n]`.
/// Zero bins are inside every disc and pass through unchanged.
pub fn prox_magnitude_ceiling<T: Scalar>(
    z: &[Complex<T>],
    envelope: &FrequencyEnvelope<T>,
    beta: T,
) -> Vec<Complex<T>> {
    debug_assert_eq!(z.len(), envelope.len());
    z.iter()
        .zip(envelope.ceiling())
        .map(|(&zn, &dn)| {
            let radius = beta * dn;
            let r = zn.norm();
            if r > radius {
                zn * (radius / r)
            } else {
                zn
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gabor::frame_bounds;
    use crate::scalar::dist;
    use crate::spectral::hann_window;

    fn env_of(values: Vec<f64>) -> FrequencyEnvelope<f64> {
        FrequencyEnvelope::from_linear(values).unwrap()
    }

    #[test]
    fn ceiling_prox_leaves_feasible_points() {
        let env = env_of(vec![2.0, 1.0, 0.5, 1.0]);
        let z = vec![
            Complex::new(1.0, 0.5),
            Complex::new(0.0, -0.9),
            Complex::new(0.3, 0.2),
            Complex::new(-0.4, 0.1),
        ];
        let out = prox_magnitude_ceiling(&z, &env, 1.0);
        assert_eq!(out, z);
    }

    #[test]
    fn ceiling_prox_projects_radially() {
        let env = env_of(vec![1.0, 2.5, 2.5]);
        // Bin 0: |2| with radius 1 -> 1. Bin 1: |3+4i| = 5 with radius 2.5
        // -> 1.5+2i. Bin 2: zero stays zero.
        let z = vec![Complex::new(2.0, 0.0), Complex::new(3.0, 4.0), Complex::new(0.0, 0.0)];
        let out = prox_magnitude_ceiling(&z, &env, 1.0);
        assert!((out[0].re - 1.0).abs() < 1e-15 && out[0].im == 0.0);
        assert!((out[1].re - 1.5).abs() < 1e-15 && (out[1].im - 2.0).abs() < 1e-15);
        assert_eq!(out[2], Complex::new(0.0, 0.0));
        // Phase is preserved.
        assert!((out[1].arg() - z[1].arg()).abs() < 1e-15);
    }

    #[test]
    fn tight_window_is_a_fixed_point() {
        let p = GaborParams::new(4, 8, 16).unwrap();
        let g = hann_window::<f64>(8).unwrap();
        let t = crate::gabor::canonical_tight(&g, &p).unwrap();
        let samples = t.samples().to_vec();
        for mu in [0.1, 1.0, 100.0] {
            let out = prox_tight_distance(&samples, mu, &p).unwrap();
            for (a, b) in out.iter().zip(&samples) {
                assert!((a - b).abs() < 1e-12, "mu={mu}");
            }
        }
    }

    #[test]
    fn painless_prox_matches_diagonal_formula() {
        // μ=1: (g[l] + g[l]/sqrt(M Σ_n g²[l-an]))/2 on the support.
        let p = GaborParams::new(4, 8, 16).unwrap();
        let g = hann_window::<f64>(8).unwrap();
        let s = g.samples();
        let out = prox_tight_distance(s, 1.0, &p).unwrap();
        let l = 16;
        let emb = g.embedded(l).unwrap();
        for (idx, &o) in out.iter().enumerate() {
            let mut acc = 0.0;
            for n in 0..p.time_shifts() {
                let shifted = (idx + l - (p.hop() * n) % l) % l;
                acc += emb[shifted] * emb[shifted];
            }
            let diag = 8.0 * acc;
            let expect = 0.5 * (s[idx] + s[idx] / diag.sqrt());
            assert!((o - expect).abs() < 1e-12, "l={idx}: {o} vs {expect}");
        }
    }

    #[test]
    fn huge_mu_approaches_canonical_tight() {
        let p = GaborParams::new(4, 8, 16).unwrap();
        let g = hann_window::<f64>(8).unwrap();
        let t = crate::gabor::canonical_tight(&g, &p).unwrap();
        let out = prox_tight_distance(g.samples(), 1e6, &p).unwrap();
        assert!(dist(&out, t.samples()) < 1e-5);
    }

    #[test]
    fn prox_output_still_generates_a_frame() {
        let p = GaborParams::new(4, 8, 16).unwrap();
        let g = hann_window::<f64>(8).unwrap();
        let out = prox_tight_distance(g.samples(), 2.0, &p).unwrap();
        let w = Window::new("w", out).unwrap();
        assert!(frame_bounds(&w, &p).is_ok());
    }
}

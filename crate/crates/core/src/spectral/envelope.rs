//! Desired-frequency-response ceiling built from a window's own spectrum.


use crate::error::{Error, Result};
use crate::gabor::Window;
use crate::scalar::Scalar;
use crate::spectral::spline::NaturalCubicSpline;
use crate::spectral::{magnitude_db, zero_pad_dft, DB_FLOOR};

/// Positive magnitude ceiling `d` of length `K̃`, conjugate-symmetric in the
/// bin index, together with the spline knots it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyEnvelope<T> {
    d: Vec<T>,
    /// `(bin, dB)` knots of the interpolating spline (empty for supplied or
    /// degenerate envelopes).
    knots: Vec<(usize, T)>,
    /// Envelope was clamped to the source spectrum, so the source window is
    /// feasible for every slack `β ≥ 1`.
    clamped: bool,
    /// Fewer than 3 spectral maxima were found; the envelope fell back to
    /// the source magnitude itself.
    degenerate: bool,
}

impl<T: Scalar> FrequencyEnvelope<T> {
    /// Wraps a user-supplied linear-magnitude ceiling. Values must be
    /// positive and symmetric within 1e-9 relative; symmetry is then made
    /// exact by taking the pointwise maximum of mirrored bins.
    pub fn from_linear(d: Vec<T>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::invalid_param("d", "empty ceiling".to_string()));
        }
        if d.iter().any(|&x| !(x > T::zero()) || !x.is_finite()) {
            return Err(Error::invalid_param("d", "ceiling must be strictly positive and finite".to_string()));
        }
        let k_tilde = d.len();
        let rel_tol = T::c(1e-9);
        for n in 0..k_tilde {
            let m = (k_tilde - n) % k_tilde;
            let (a, b) = (d[n], d[m]);
            if (a - b).abs() > rel_tol * a.max(b) {
                return Err(Error::invalid_param(
                    "d",
                    format!("ceiling is not conjugate-symmetric at bin {n}"),
                ));
            }
        }
        let mut sym = d;
        for n in 0..k_tilde {
            let m = (k_tilde - n) % k_tilde;
            let v = sym[n].max(sym[m]);
            sym[n] = v;
            sym[m] = v;
        }
        Ok(Self { d: sym, knots: Vec::new(), clamped: false, degenerate: false })
    }

    pub fn ceiling(&self) -> &[T] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn knots(&self) -> &[(usize, T)] {
        &self.knots
    }

    pub fn clamped(&self) -> bool {
        self.clamped
    }

    pub fn degenerate(&self) -> bool {
        self.degenerate
    }

    pub(crate) fn from_parts(d: Vec<T>, knots: Vec<(usize, T)>, clamped: bool, degenerate: bool) -> Self {
        Self { d, knots, clamped, degenerate }
    }
}

/// Builds the ceiling for a source window `g0` by interpolating the maxima
/// of its padded dB spectrum with a natural C² cubic spline:
///
/// 1. dB magnitude of the zero-padded DFT over bins `0..=K̃/2`;
/// 2. knots: bin 0, every strict interior local maximum, and the Nyquist bin;
/// 3. natural cubic spline through `(bin, dB)`;
/// 4. evaluation at every bin, back to linear magnitude;
/// 5. pointwise clamp to the source magnitude so `g0` stays feasible for
///    every slack `β ≥ 1`;
/// 6. mirror to the full length for exact conjugate symmetry.
///
/// With fewer than 3 knots (monotone spectrum) the envelope degenerates to
/// the source magnitude itself, floored to stay positive.
pub fn sidelobe_envelope<T: Scalar>(g0: &Window<T>, k_tilde: usize) -> Result<FrequencyEnvelope<T>> {
    if k_tilde <= g0.support_len() {
        return Err(Error::invalid_param(
            "K_tilde",
            format!(
                "padded length {k_tilde} must exceed the window support {}",
                g0.support_len()
            ),
        ));
    }
    let spectrum = zero_pad_dft(g0, k_tilde)?;
    let half = k_tilde / 2;

    // Symmetrized magnitude: clamping against it keeps the final envelope
    // both exactly symmetric and pointwise above |F̃g0| on every bin.
    let mag: Vec<T> = spectrum.iter().map(|z| z.norm()).collect();
    let mag_sym: Vec<T> = (0..=half)
        .map(|n| mag[n].max(mag[(k_tilde - n) % k_tilde]))
        .collect();

    let db = magnitude_db(&spectrum[..=half]);

    let mut knot_bins = vec![0usize];
    for i in 1..half {
        if db[i] > db[i - 1] && db[i] > db[i + 1] {
            knot_bins.push(i);
        }
    }
    if *knot_bins.last().unwrap() != half {
        knot_bins.push(half);
    }

    if knot_bins.len() < 3 {
        let floor = T::c(DB_FLOOR);
        let d_half: Vec<T> = mag_sym.iter().map(|&m| m.max(floor)).collect();
        let d = mirror_full(&d_half, k_tilde);
        return Ok(FrequencyEnvelope::from_parts(d, Vec::new(), true, true));
    }

    let xs: Vec<T> = knot_bins.iter().map(|&b| T::from_len(b)).collect();
    let ys: Vec<T> = knot_bins.iter().map(|&b| db[b]).collect();
    let spline = NaturalCubicSpline::fit(xs, ys)?;

    let twentieth = T::c(1.0 / 20.0);
    let ten = T::c(10.0);
    let d_half: Vec<T> = (0..=half)
        .map(|n| {
            let lin = ten.powf(spline.eval(T::from_len(n)) * twentieth);
            lin.max(mag_sym[n])
        })
        .collect();
    let d = mirror_full(&d_half, k_tilde);
    let knots = knot_bins.into_iter().map(|b| (b, db[b])).collect();
    Ok(FrequencyEnvelope::from_parts(d, knots, true, false))
}

/// Extends values on bins `0..=K̃/2` to the full length by `d[n] = d[K̃-n]`.
fn mirror_full<T: Scalar>(half_values: &[T], k_tilde: usize) -> Vec<T> {
    let mut d = vec![T::zero(); k_tilde];
    d[..half_values.len()].copy_from_slice(half_values);
    for n in half_values.len()..k_tilde {
        d[n] = d[k_tilde - n];
    }
    d
}

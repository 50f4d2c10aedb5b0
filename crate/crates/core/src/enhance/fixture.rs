//! Corpus-free speech-like test signals.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::scalar::{norm, Scalar};

/// Two-pole resonator `y[t] = x[t] + 2r cos(ω) y[t-1] - r² y[t-2]`.
struct Resonator {
    a1: f64,
    a2: f64,
    y1: f64,
    y2: f64,
}

impl Resonator {
    fn new(normalized_freq: f64, radius: f64) -> Self {
        Self {
            a1: 2.0 * radius * (2.0 * std::f64::consts::PI * normalized_freq).cos(),
            a2: -radius * radius,
            y1: 0.0,
            y2: 0.0,
        }
    }

    fn tick(&mut self, x: f64) -> f64 {
        let y = x + self.a1 * self.y1 + self.a2 * self.y2;
        self.y2 = self.y1;
        self.y1 = y;
        y
    }
}

/// Deterministic speech-like fixture: white Gaussian excitation shaped by a
/// cascade of formant-style resonators and a slowly varying amplitude
/// envelope, normalized to unit energy. The same seed always produces the
/// same signal.
pub fn speech_like_fixture<T: Scalar>(seed: u64, len: usize) -> Vec<T> {
    assert!(len > 0, "fixture length must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Formant-ish resonances (fractions of the sample rate) with a little
    // per-seed jitter so the corpus is not a single spectrum.
    let base = [0.031, 0.086, 0.158];
    let radii = [0.985, 0.972, 0.955];
    let mut stages: Vec<Resonator> = base
        .iter()
        .zip(radii)
        .map(|(&f, r)| {
            let jitter: f64 = rng.gen_range(-0.1..0.1);
            Resonator::new(f * (1.0 + jitter), r)
        })
        .collect();

    // Slow positive envelope: a few random raised-cosine syllable bumps.
    let bumps = 2 + (len / 512).min(6);
    let mut envelope = vec![0.15f64; len];
    for _ in 0..bumps {
        let center = rng.gen_range(0.0..len as f64);
        let width = rng.gen_range(0.08..0.35) * len as f64;
        let height: f64 = rng.gen_range(0.4..1.0);
        for (t, e) in envelope.iter_mut().enumerate() {
            let d = (t as f64 - center).abs() / width;
            if d < 1.0 {
                *e += height * 0.5 * (1.0 + (std::f64::consts::PI * d).cos());
            }
        }
    }

    let mut out: Vec<T> = (0..len)
        .map(|t| {
            let mut x: f64 = <StandardNormal as Distribution<f64>>::sample(&StandardNormal, &mut rng);
            for stage in &mut stages {
                x = stage.tick(x);
            }
            T::c(x * envelope[t])
        })
        .collect();
    let scale = T::one() / norm(&out);
    for x in &mut out {
        *x *= scale;
    }
    out
}

//! Lattice parameters of a Gabor system.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Time-frequency lattice: hop `a`, channels `M`, ambient signal length `L`,
/// and the derived number of time shifts `N = L/a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaborParams {
    a: usize,
    m: usize,
    l: usize,
    n: usize,
    undersampled: bool,
}

impl GaborParams {
    /// Validates the lattice. Both `a` and `M` must divide `L`.
    ///
    /// An undersampled lattice (`M/a < 1`) cannot generate a frame; it is
    /// accepted but flagged via [`GaborParams::undersampled`].
    pub fn new(a: usize, m: usize, l: usize) -> Result<Self> {
        if a == 0 || m == 0 || l == 0 {
            return Err(Error::LatticeIncompatible {
                a,
                m,
                l,
                reason: "all of a, M, L must be positive".into(),
            });
        }
        if l % a != 0 {
            return Err(Error::LatticeIncompatible {
                a,
                m,
                l,
                reason: format!("time shift a={a} does not divide L={l}"),
            });
        }
        if l % m != 0 {
            return Err(Error::LatticeIncompatible {
                a,
                m,
                l,
                reason: format!("channel count M={m} does not divide L={l}"),
            });
        }
        Ok(Self { a, m, l, n: l / a, undersampled: m < a })
    }

    /// Time-shift width in samples.
    pub fn hop(&self) -> usize {
        self.a
    }

    /// Number of frequency channels.
    pub fn channels(&self) -> usize {
        self.m
    }

    /// Ambient (periodic) signal length.
    pub fn signal_len(&self) -> usize {
        self.l
    }

    /// Number of time shifts `N = L/a`.
    pub fn time_shifts(&self) -> usize {
        self.n
    }

    /// Lattice redundancy `M/a`.
    pub fn redundancy(&self) -> f64 {
        self.m as f64 / self.a as f64
    }

    /// True when `M/a < 1`, i.e. the lattice cannot generate a frame.
    pub fn undersampled(&self) -> bool {
        self.undersampled
    }

    /// Total number of coefficients `M * N`.
    pub fn coefficient_count(&self) -> usize {
        self.m * self.n
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest common multiple of `a` and `m` that is at least `min_len`.
///
/// This is the default ambient length for a window of support `min_len`:
/// the shortest periodic system in which both the hop and the channel count
/// divide the signal length and the window fits.
pub fn default_ambient_len(a: usize, m: usize, min_len: usize) -> usize {
    let step = a / gcd(a, m) * m;
    let mut l = step;
    while l < min_len {
        l += step;
    }
    l
}

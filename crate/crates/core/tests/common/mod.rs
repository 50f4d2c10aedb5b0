//! Shared oracle helpers: everything here goes through explicitly
//! constructed dense Gabor matrices, independent of the library's folded
//! transforms and Walnut-form frame algebra.

use nalgebra::{Complex, DMatrix, DVector};
use neartight_core::gabor::{GaborParams, Window};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Explicit `MN x L` Gabor analysis matrix: row `m + nM` holds
/// `conj(g_{m,n}[l]) = e^{-i 2π m l / M} g[(l - a n) mod L]`.
pub fn gabor_matrix(window: &Window<f64>, params: &GaborParams) -> DMatrix<Complex<f64>> {
    let l = params.signal_len();
    let m_ch = params.channels();
    let n_sh = params.time_shifts();
    let g = window.embedded(l).expect("embedding");
    DMatrix::from_fn(m_ch * n_sh, l, |row, col| {
        let m = row % m_ch;
        let n = row / m_ch;
        let shift = (col + l - (params.hop() * n) % l) % l;
        let phase = -2.0 * std::f64::consts::PI * (m * col) as f64 / m_ch as f64;
        Complex::new(phase.cos(), phase.sin()) * g[shift]
    })
}

pub fn to_cvector(v: &[f64]) -> DVector<Complex<f64>> {
    DVector::from_iterator(v.len(), v.iter().map(|&x| Complex::new(x, 0.0)))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_signal(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_window(rng: &mut ChaCha8Rng, k: usize, name: &str) -> Window<f64> {
    // Strictly positive samples keep every lattice of interest a frame.
    let samples = (0..k).map(|_| rng.gen_range(0.1..1.0)).collect();
    Window::new(name.to_string(), samples).expect("valid window")
}

/// Squared extreme singular values of the explicit analysis matrix.
pub fn oracle_frame_bounds(window: &Window<f64>, params: &GaborParams) -> (f64, f64) {
    let g = gabor_matrix(window, params);
    let sv = g.svd(false, false).singular_values;
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    (smin * smin, smax * smax)
}

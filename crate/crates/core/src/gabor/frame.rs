//! Frame operator, frame bounds, canonical dual and canonical tight windows.
//!
//! The frame operator of a real window has the Walnut form
//! `S[l,l'] = M Σ_n g[(l-an) mod L] g[(l'-an) mod L]` when `M | (l-l')` and
//! zero otherwise, so under the index permutation `l = r + iM` it is block
//! diagonal with `M` symmetric blocks of size `L/M`. All spectral
//! computations work block-wise; when the window support satisfies `K ≤ M`
//! (the painless case) every block is diagonal and the fast path reads the
//! diagonal directly.

use crate::error::{Error, Result};
use crate::gabor::{GaborParams, Window};
use crate::linalg::{SquareMatrix, SymmetricEigen};
use crate::scalar::Scalar;

/// Relative tolerance under which the lower frame bound counts as zero.
const FRAME_TOL: f64 = 1e-10;

/// Frame bounds, condition number and the painless flag of a window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameDiagnostics<T> {
    /// Lower frame bound `A` (smallest eigenvalue of the frame operator).
    pub lower: T,
    /// Upper frame bound `B` (largest eigenvalue).
    pub upper: T,
    /// `κ = sqrt(B/A)`.
    pub condition_number: T,
    /// Window support `K ≤ M`, making the frame operator diagonal.
    pub painless: bool,
}

/// True when the window support is short enough (`K ≤ M`) for the frame
/// operator to be diagonal.
pub fn is_painless<T: Scalar>(window: &Window<T>, params: &GaborParams) -> bool {
    window.support_len() <= params.channels()
}

/// Diagonal of the frame operator: `M Σ_n g[(l - a n) mod L]²`.
fn walnut_diagonal<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<Vec<T>> {
    window.embedded(params.signal_len())?;
    let l = params.signal_len();
    let m_scale = T::from_len(params.channels());
    let mut diag = vec![T::zero(); l];
    for frame in 0..params.time_shifts() {
        let start = params.hop() * frame;
        for (k, &gk) in window.samples().iter().enumerate() {
            let pos = (start + k) % l;
            diag[pos] += gk * gk;
        }
    }
    for d in &mut diag {
        *d *= m_scale;
    }
    Ok(diag)
}

/// The `M` symmetric blocks of the permuted frame operator; block `r` holds
/// `S[r + iM, r + jM]` for `i, j` in `0..L/M`.
fn walnut_blocks<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<Vec<SquareMatrix<T>>> {
    window.embedded(params.signal_len())?;
    let l = params.signal_len();
    let m = params.channels();
    let p = l / m;
    let g = window.samples();
    let k_len = g.len();

    let mut blocks = vec![SquareMatrix::zeros(p); m];
    for frame in 0..params.time_shifts() {
        let start = params.hop() * frame;
        for (k1, &g1) in g.iter().enumerate() {
            let l1 = (start + k1) % l;
            let r = l1 % m;
            let i = l1 / m;
            // Partner samples share the residue of k1 modulo M.
            let mut k2 = k1 % m;
            while k2 < k_len {
                let l2 = (start + k2) % l;
                let j = l2 / m;
                blocks[r][(i, j)] += g1 * g[k2];
                k2 += m;
            }
        }
    }
    let m_scale = T::from_len(m);
    for b in &mut blocks {
        let n = b.dim();
        for i in 0..n {
            for j in 0..n {
                b[(i, j)] *= m_scale;
            }
        }
    }
    Ok(blocks)
}

/// Dense `L x L` frame operator `S = G* G` assembled from its Walnut blocks.
/// Entries with `l - l'` not a multiple of `M` are exactly zero.
pub fn frame_operator_matrix<T: Scalar>(
    window: &Window<T>,
    params: &GaborParams,
) -> Result<SquareMatrix<T>> {
    let blocks = walnut_blocks(window, params)?;
    let l = params.signal_len();
    let m = params.channels();
    let mut s = SquareMatrix::zeros(l);
    for (r, block) in blocks.iter().enumerate() {
        for i in 0..block.dim() {
            for j in 0..block.dim() {
                s[(r + i * m, r + j * m)] = block[(i, j)];
            }
        }
    }
    Ok(s)
}

/// Eigendecompositions of all Walnut blocks plus the global extreme
/// eigenvalues. The painless path never materializes eigenvectors.
enum Spectrum<T> {
    Diagonal(Vec<T>),
    Blocks(Vec<SymmetricEigen<T>>),
}

struct FrameSpectrum<T> {
    spectrum: Spectrum<T>,
    lower: T,
    upper: T,
}

fn frame_spectrum<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<FrameSpectrum<T>> {
    if is_painless(window, params) {
        let diag = walnut_diagonal(window, params)?;
        let lower = diag.iter().cloned().fold(T::infinity(), T::min);
        let upper = diag.iter().cloned().fold(T::zero(), T::max);
        Ok(FrameSpectrum { spectrum: Spectrum::Diagonal(diag), lower, upper })
    } else {
        let blocks = walnut_blocks(window, params)?;
        let mut lower = T::infinity();
        let mut upper = T::zero();
        let mut eigs = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let e = SymmetricEigen::new(b)?;
            lower = lower.min(e.eigenvalues[0]);
            upper = upper.max(*e.eigenvalues.last().expect("non-empty block"));
            eigs.push(e);
        }
        Ok(FrameSpectrum { spectrum: Spectrum::Blocks(eigs), lower, upper })
    }
}

fn check_frame<T: Scalar>(lower: T, upper: T) -> Result<()> {
    let tol = T::c(FRAME_TOL) * upper;
    if !(lower > tol) {
        return Err(Error::NotAFrame {
            lower: lower.to_f64().unwrap_or(f64::NAN),
            tolerance: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Frame bounds `(A, B)`: the extreme eigenvalues of the frame operator.
/// Errors when `A` falls below the frame tolerance `1e-10 B`.
pub fn frame_bounds<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<(T, T)> {
    let fs = frame_spectrum(window, params)?;
    check_frame(fs.lower, fs.upper)?;
    Ok((fs.lower, fs.upper))
}

/// Condition number `κ = sqrt(B/A) ≥ 1` of the analysis matrix.
pub fn condition_number<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<T> {
    let (a, b) = frame_bounds(window, params)?;
    Ok((b / a).sqrt())
}

/// Bounds, condition number and painless flag in one pass.
pub fn frame_diagnostics<T: Scalar>(
    window: &Window<T>,
    params: &GaborParams,
) -> Result<FrameDiagnostics<T>> {
    let (lower, upper) = frame_bounds(window, params)?;
    Ok(FrameDiagnostics {
        lower,
        upper,
        condition_number: (upper / lower).sqrt(),
        painless: is_painless(window, params),
    })
}

/// Applies `f` to the spectrum of the frame operator: returns `Q f(Λ) Qᵀ g`
/// for the zero-embedded window, as a full length-`L` vector.
fn apply_frame_function<T: Scalar>(
    window: &Window<T>,
    params: &GaborParams,
    f: impl Fn(T) -> T,
) -> Result<Vec<T>> {
    let fs = frame_spectrum(window, params)?;
    check_frame(fs.lower, fs.upper)?;
    let l = params.signal_len();
    let m = params.channels();
    let emb = window.embedded(l)?;
    match fs.spectrum {
        Spectrum::Diagonal(diag) => {
            Ok(emb.iter().zip(&diag).map(|(&g, &d)| g * f(d)).collect())
        }
        Spectrum::Blocks(eigs) => {
            let p = l / m;
            let mut out = vec![T::zero(); l];
            for (r, eig) in eigs.iter().enumerate() {
                let sub: Vec<T> = (0..p).map(|i| emb[r + i * m]).collect();
                let mapped = eig.apply_spectral(&sub, &f);
                for (i, v) in mapped.into_iter().enumerate() {
                    out[r + i * m] = v;
                }
            }
            Ok(out)
        }
    }
}

/// Trims trailing exact zeros so painless outputs keep their support.
fn window_from_full<T: Scalar>(
    full: Vec<T>,
    name: String,
    provenance: String,
    l: usize,
) -> Result<Window<T>> {
    let support = full
        .iter()
        .rposition(|&x| x != T::zero())
        .map(|i| i + 1)
        .unwrap_or(1);
    let mut samples = full;
    samples.truncate(support);
    Ok(Window::new(name, samples)?
        .with_provenance(provenance)
        .with_ambient(l)?)
}

/// Canonical dual window `S⁻¹ g`. Painless fast path: `g[l] / diag(S)[l]`.
pub fn canonical_dual<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<Window<T>> {
    let full = apply_frame_function(window, params, |lambda| T::one() / lambda)?;
    window_from_full(
        full,
        format!("{}-dual", window.name()),
        format!(
            "canonical dual of {} at a={} M={} L={}",
            window.name(),
            params.hop(),
            params.channels(),
            params.signal_len()
        ),
        params.signal_len(),
    )
}

/// Canonical tight window `S^{-1/2} g`, the closest Parseval tight window.
/// Painless fast path: `g[l] / sqrt(diag(S)[l])`.
pub fn canonical_tight<T: Scalar>(window: &Window<T>, params: &GaborParams) -> Result<Window<T>> {
    let full = apply_frame_function(window, params, |lambda| T::one() / lambda.sqrt())?;
    window_from_full(
        full,
        format!("{}-tight", window.name()),
        format!(
            "canonical tight window of {} at a={} M={} L={}",
            window.name(),
            params.hop(),
            params.channels(),
            params.signal_len()
        ),
        params.signal_len(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta(l: usize) -> Window<f64> {
        let mut s = vec![0.0; l];
        s[0] = 1.0;
        Window::new("delta", s).unwrap()
    }

    #[test]
    fn delta_dense_lattice_gives_scaled_identity() {
        // a=1, M=L=8, unit-norm delta: S = 8 I, so A = B = 8.
        let p = GaborParams::new(1, 8, 8).unwrap();
        let g = delta(8);
        let s = frame_operator_matrix(&g, &p).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let expect = if i == j { 8.0 } else { 0.0 };
                assert!((s[(i, j)] - expect).abs() < 1e-14);
            }
        }
        let (a, b) = frame_bounds(&g, &p).unwrap();
        assert!((a - 8.0).abs() < 1e-12 && (b - 8.0).abs() < 1e-12);
        assert!((condition_number(&g, &p).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn walnut_sparsity_pattern() {
        let p = GaborParams::new(2, 4, 16).unwrap();
        let g = Window::<f64>::new("g", vec![0.2, 1.0, 0.7, 0.1, 0.3, 0.9]).unwrap();
        let s = frame_operator_matrix(&g, &p).unwrap();
        for i in 0..16 {
            for j in 0..16 {
                if (i as isize - j as isize).rem_euclid(4) != 0 {
                    assert_eq!(s[(i, j)], 0.0, "S[{i},{j}] must vanish");
                }
            }
        }
        assert!(s.asymmetry() < 1e-14);
    }

    #[test]
    fn sparse_delta_is_not_a_frame() {
        // g=δ₀, a=2, M=2, L=4: diagonal vanishes at l=1,3.
        let p = GaborParams::new(2, 2, 4).unwrap();
        let g = delta(1);
        assert!(matches!(frame_bounds(&g, &p), Err(Error::NotAFrame { .. })));
    }

    #[test]
    fn painless_dual_matches_diagonal_formula() {
        let p = GaborParams::new(4, 8, 16).unwrap();
        let g = Window::<f64>::new("g", vec![0.3, 0.8, 1.0, 0.8, 0.3, 0.1]).unwrap();
        let diag = walnut_diagonal(&g, &p).unwrap();
        let dual = canonical_dual(&g, &p).unwrap();
        let demb = dual.embedded(16).unwrap();
        let gemb = g.embedded(16).unwrap();
        for l in 0..16 {
            let expect = if gemb[l] == 0.0 { 0.0 } else { gemb[l] / diag[l] };
            assert!((demb[l] - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn tight_window_is_parseval_and_idempotent() {
        let p = GaborParams::new(4, 8, 16).unwrap();
        let g = Window::<f64>::new("g", vec![0.3, 0.8, 1.0, 0.8, 0.3, 0.1]).unwrap();
        let t = canonical_tight(&g, &p).unwrap();
        let (a, b) = frame_bounds(&t, &p).unwrap();
        assert!((a - 1.0).abs() < 1e-10 && (b - 1.0).abs() < 1e-10);
        // Projection: applying the map twice changes nothing.
        let t2 = canonical_tight(&t, &p).unwrap();
        let e1 = t.embedded(16).unwrap();
        let e2 = t2.embedded(16).unwrap();
        for (x, y) in e1.iter().zip(&e2) {
            assert!((x - y).abs() < 1e-10);
        }
        // Dual of a Parseval tight window is the window itself.
        let d = canonical_dual(&t, &p).unwrap();
        let ed = d.embedded(16).unwrap();
        for (x, y) in e1.iter().zip(&ed) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn general_path_agrees_with_painless_path() {
        // K ≤ M window evaluated through the block eigendecomposition by
        // forcing the general path via a wrapper with padded support.
        let p = GaborParams::new(4, 8, 16).unwrap();
        let mut samples: Vec<f64> = vec![0.3, 0.8, 1.0, 0.8, 0.3, 0.1];
        let g = Window::new("g", samples.clone()).unwrap();
        assert!(is_painless(&g, &p));
        // Pad with zeros beyond M so the same window takes the general path.
        samples.resize(9, 0.0);
        samples[8] = 1e-300; // keeps support at 9 without changing the frame
        let g_padded = Window::new("g", samples).unwrap();
        assert!(!is_painless(&g_padded, &p));

        let (a1, b1) = frame_bounds(&g, &p).unwrap();
        let (a2, b2) = frame_bounds(&g_padded, &p).unwrap();
        assert!((a1 - a2).abs() < 1e-12 * b1);
        assert!((b1 - b2).abs() < 1e-12 * b1);

        let t1 = canonical_tight(&g, &p).unwrap().embedded(16).unwrap();
        let t2 = canonical_tight(&g_padded, &p).unwrap().embedded(16).unwrap();
        let d1 = canonical_dual(&g, &p).unwrap().embedded(16).unwrap();
        let d2 = canonical_dual(&g_padded, &p).unwrap().embedded(16).unwrap();
        for l in 0..16 {
            assert!((t1[l] - t2[l]).abs() < 1e-12);
            assert!((d1[l] - d2[l]).abs() < 1e-12);
        }
    }
}

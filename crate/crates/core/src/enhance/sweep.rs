//! Cartesian evaluation of windows across hop sizes.

use serde::{Deserialize, Serialize};

use crate::enhance::{enhance, snr_db, MaskSpec, NoisyPair};
use crate::error::{Error, Result};
use crate::gabor::{condition_number, default_ambient_len, GaborParams, Window};
use crate::scalar::Scalar;

/// Lattice template for a sweep: the channel count is fixed, the hop varies,
/// and the ambient length defaults to the smallest lattice-compatible length
/// that holds the longest signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeTemplate {
    pub channels: usize,
    pub ambient_len: Option<usize>,
}

/// One sweep cell: a window evaluated at a hop, averaged over the corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord<T> {
    pub window_id: String,
    pub hop: usize,
    pub snr_out_db: T,
    pub kappa: T,
    pub mask_kind: String,
}

/// A cell that could not be evaluated; the sweep carries on.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepFailure {
    pub window_id: String,
    pub hop: usize,
    pub error: String,
}

/// Records plus per-cell failures.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepOutcome<T> {
    pub records: Vec<EvalRecord<T>>,
    pub failures: Vec<SweepFailure>,
}

fn padded<T: Scalar>(v: &[T], l: usize) -> Vec<T> {
    let mut out = vec![T::zero(); l];
    out[..v.len()].copy_from_slice(v);
    out
}

/// Evaluates every `(window, hop)` cell on the whole corpus: the condition
/// number is computed once per cell and the output SNR is the arithmetic
/// mean of per-signal SNRs in dB. Signals are zero-padded to the cell's
/// ambient length. Failing cells are recorded and skipped.
pub fn sweep<T: Scalar>(
    windows: &[Window<T>],
    hops: &[usize],
    pairs: &[NoisyPair<T>],
    spec: &MaskSpec<T>,
    template: LatticeTemplate,
) -> Result<SweepOutcome<T>> {
    if pairs.is_empty() {
        return Err(Error::invalid_param("pairs", "empty evaluation corpus".to_string()));
    }
    let longest = pairs.iter().map(|p| p.clean.len()).max().unwrap_or(0);

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for window in windows {
        for &hop in hops {
            match eval_cell(window, hop, pairs, spec, template, longest) {
                Ok(record) => records.push(record),
                Err(e) => failures.push(SweepFailure {
                    window_id: window.name().to_string(),
                    hop,
                    error: e.to_string(),
                }),
            }
        }
    }
    Ok(SweepOutcome { records, failures })
}

fn eval_cell<T: Scalar>(
    window: &Window<T>,
    hop: usize,
    pairs: &[NoisyPair<T>],
    spec: &MaskSpec<T>,
    template: LatticeTemplate,
    longest: usize,
) -> Result<EvalRecord<T>> {
    let min_len = longest.max(window.support_len());
    let l = template
        .ambient_len
        .unwrap_or_else(|| default_ambient_len(hop, template.channels, min_len));
    let params = GaborParams::new(hop, template.channels, l)?;
    // Windows arrive with whatever ambient length their source had; the
    // sweep re-pins them to the cell lattice.
    let cell_window = Window::new(window.name().to_string(), window.samples().to_vec())?
        .with_provenance(window.provenance().to_string())
        .with_ambient(l)?;
    let kappa = condition_number(&cell_window, &params)?;

    let mut total = T::zero();
    for pair in pairs {
        let cell_pair = NoisyPair {
            clean: padded(&pair.clean, l),
            noisy: padded(&pair.noisy, l),
            noise: padded(&pair.noise, l),
            target_snr_db: pair.target_snr_db,
            seed: pair.seed,
        };
        let out = enhance(&cell_pair, &cell_window, &params, spec)?;
        total += snr_db(&cell_pair.clean, &out)?;
    }
    Ok(EvalRecord {
        window_id: window.name().to_string(),
        hop,
        snr_out_db: total / T::from_len(pairs.len()),
        kappa,
        mask_kind: spec.kind.as_str().to_string(),
    })
}

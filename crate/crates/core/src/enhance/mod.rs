//! Wiener-filter denoising harness.
//!
//! Evaluates analysis windows by the classic time-frequency masking
//! pipeline: add Gaussian noise at a target SNR, analyze with the window
//! under test, apply an ideal or decision-directed Wiener mask, resynthesize
//! with the canonical dual, and score the output SNR. The sweep runs the
//! pipeline over a grid of windows and hop sizes.

mod fixture;
mod masks;
mod noise;
mod pipeline;
mod sweep;

pub use fixture::speech_like_fixture;
pub use masks::{dd_wiener_mask, ideal_wiener_mask, MaskKind, MaskSpec, NoisePsdMode};
pub use noise::{add_noise_at_snr, snr_db, NoisyPair};
pub use pipeline::{enhance, noise_psd_oracle};
pub use sweep::{sweep, EvalRecord, LatticeTemplate, SweepFailure, SweepOutcome};

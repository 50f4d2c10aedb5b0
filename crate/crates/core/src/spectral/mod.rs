//! Frequency-response tooling: zero-padded DFT, dB magnitudes, standard
//! window families, energy normalization and the spline-interpolated
//! sidelobe ceiling used as the design constraint.

mod dft;
mod envelope;
pub mod spline;
mod windows;

pub use dft::{magnitude_db, zero_pad_dft, zero_pad_dft_adjoint, DB_FLOOR};
pub use envelope::{sidelobe_envelope, FrequencyEnvelope};
pub use windows::{hann_window, kaiser_window, normalize_energy, rectangular_window};

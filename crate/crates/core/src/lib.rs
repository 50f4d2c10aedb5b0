//! Gabor frame analysis and nearly tight window design.
//!
//! The crate covers the full pipeline for designing analysis windows that are
//! close to tight (small frame condition number) while their zero-padded
//! frequency response stays under a prescribed magnitude ceiling:
//!
//! * [`gabor`] — discrete Gabor transform, inverse transform, frame operator
//!   in Walnut form, frame bounds, canonical dual and canonical tight windows.
//! * [`spectral`] — zero-padded DFT, dB magnitude, standard window families,
//!   energy normalization and the spline-interpolated sidelobe envelope.
//! * [`design`] — the linearized ADMM solver for the nearly tight window
//!   design problem with its two closed-form proximal operators.
//! * [`enhance`] — Wiener-filter denoising harness used to evaluate windows
//!   across hop sizes (ideal and decision-directed masks).
//! * [`io`] — window/envelope/report/record file formats and mono WAV.
//!
//! All numerics are generic over the scalar type through [`Scalar`]
//! (implemented for `f32` and `f64`); the type aliases at the crate root fix
//! `f64` as the working precision used by the CLI and the file formats.

pub mod design;
pub mod enhance;
pub mod error;
pub mod gabor;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use gabor::{FrameDiagnostics, GaborCoefficients, GaborParams, Window};

/// `f64` window, the working precision of the pipeline.
pub type Window64 = gabor::Window<f64>;
/// `f64` Gabor coefficient array.
pub type Coefficients64 = gabor::GaborCoefficients<f64>;
/// `f64` frame diagnostics.
pub type FrameDiagnostics64 = gabor::FrameDiagnostics<f64>;

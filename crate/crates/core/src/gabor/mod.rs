//! Discrete Gabor transform and frame algebra.
//!
//! A Gabor system on `C^L` is the family of windowed complex sinusoids
//! `g_{m,n}[l] = exp(i 2π m l / M) g[(l - a n) mod L]` over `M` frequency
//! channels and `N = L/a` time shifts. This module provides the analysis
//! transform ([`dgt`]), its adjoint synthesis ([`idgt`]), the frame operator
//! in Walnut form, frame bounds, the condition number, and the canonical
//! dual and canonical tight windows.

mod coefficients;
mod frame;
mod params;
mod transform;
mod window;

pub use coefficients::GaborCoefficients;
pub use frame::{
    canonical_dual, canonical_tight, condition_number, frame_bounds, frame_diagnostics,
    frame_operator_matrix, is_painless, FrameDiagnostics,
};
pub use params::{default_ambient_len, GaborParams};
pub use transform::{dgt, idgt, idgt_complex};
pub use window::Window;

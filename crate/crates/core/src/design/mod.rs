//! Nearly tight window design.
//!
//! Minimizes half the squared distance to the set of Parseval tight windows
//! subject to a per-bin magnitude ceiling on the zero-padded frequency
//! response, `|F̃g[n]| ≤ β d[n]`. The problem is split as
//! `minimize F(g) + G(F̃g)` and solved by linearized ADMM with two
//! closed-form proximal maps: a convex combination with the canonical tight
//! window, and a radial projection onto per-bin discs.

mod config;
mod prox;
mod solver;

pub use config::AdmmConfig;
pub use prox::{prox_magnitude_ceiling, prox_tight_distance, prox_tight_distance_detailed};
pub use solver::{design_window, distance_to_tight, max_constraint_violation, AdmmSolver, AdmmState, DesignReport};

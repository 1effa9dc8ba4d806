//! Statistical behaviour of a single SGT feature `ψ_uv` under a simple
//! generative pattern: `u` is followed by `v` after a short Gaussian gap
//! `X ~ N(μ_α, σ_α²)`, and consecutive `u` events are separated by a long
//! Gaussian gap `Y ~ N(μ_β, σ_β²)`, with `μ_α < μ_β`.
//!
//! [`expected_psi`] and [`variance_psi`] evaluate the closed forms,
//! [`simulate_pattern`] draws sequences from the model and
//! [`monte_carlo_psi`] estimates the same moments empirically through
//! [`sgt_core::pair_effects`]. The closed forms describe the pre-root ratio
//! `W⁽κ⁾ / W⁽⁰⁾`, so the Monte Carlo reports that quantity by default.

mod closed_form;
mod error;
mod grid;
mod monte_carlo;
mod params;
mod separation;
mod simulate;

pub use closed_form::{expected_psi, limit_expected_psi, variance_psi, ClosedFormTerms};
pub use error::{Result, TheoryError};
pub use grid::{validation_grid, VALIDATION_RESOLUTION};
pub use monte_carlo::{monte_carlo_psi, monte_carlo_psi_at, sample_psi, FeatureLevel, MonteCarloSummary};
pub use params::PatternParams;
pub use separation::{delta_separation, SeparationPoint, SeparationReport};
pub use simulate::{simulate_assumption1, simulate_pattern, PatternSample};

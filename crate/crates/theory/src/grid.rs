use sgt_core::Normalization;

use crate::params::PatternParams;

/// Resolution used for validation runs; fine enough that tick rounding
/// does not bias `E[e^(−κX)]`.
pub const VALIDATION_RESOLUTION: u32 = 1000;

/// Parameter points spanning `κ ∈ {1, 5, 10}` and both normalizations, all
/// at `L = 500`, used to compare the closed forms with Monte Carlo.
pub fn validation_grid() -> Vec<(PatternParams, Normalization)> {
    let base = PatternParams {
        mu_alpha: 1.0,
        sigma_alpha: 0.1,
        mu_beta: 5.0,
        sigma_beta: 0.5,
        p: 0.1,
        length: 500,
        kappa: 1.0,
        resolution: VALIDATION_RESOLUTION,
    };
    vec![
        (base, Normalization::LengthInsensitive),
        (PatternParams { mu_alpha: 2.0, sigma_alpha: 0.3, mu_beta: 8.0, sigma_beta: 1.0, ..base }, Normalization::LengthSensitive),
        (PatternParams { sigma_beta: 0.3, kappa: 5.0, ..base }, Normalization::LengthSensitive),
        (
            PatternParams { mu_alpha: 0.5, mu_beta: 3.0, sigma_beta: 0.3, p: 0.2, kappa: 5.0, ..base },
            Normalization::LengthInsensitive,
        ),
        (PatternParams { sigma_alpha: 0.05, sigma_beta: 0.2, kappa: 10.0, ..base }, Normalization::LengthSensitive),
        (
            PatternParams { mu_alpha: 0.8, sigma_alpha: 0.04, mu_beta: 4.0, sigma_beta: 0.2, p: 0.15, kappa: 10.0, ..base },
            Normalization::LengthInsensitive,
        ),
    ]
}

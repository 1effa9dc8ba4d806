use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sgt_core::{pair_effects, Normalization};

use crate::error::{Result, TheoryError};
use crate::params::PatternParams;
use crate::simulate::{simulate_pattern, PatternSample};

/// Which form of `ψ_uv` a replicate reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FeatureLevel {
    /// `W⁽κ⁾ / W⁽⁰⁾`, the quantity the closed forms describe.
    #[default]
    PreRoot,
    /// `(W⁽κ⁾ / W⁽⁰⁾)^(1/κ)`, the shipped feature.
    Rooted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloSummary {
    pub replicates: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    /// `sqrt(variance / replicates)`
    pub std_error: f64,
    pub values: Vec<f64>,
}

impl MonteCarloSummary {
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(TheoryError::InvalidParams(format!("need at least 2 replicates, got {n}")));
        }
        // shifted by the first value, so constant input gives exactly zero variance
        let shift = values[0];
        let offset = values.iter().map(|x| x - shift).sum::<f64>() / n as f64;
        let mean = shift + offset;
        let variance = values.iter().map(|x| (x - shift - offset).powi(2)).sum::<f64>() / (n - 1) as f64;
        Ok(Self { replicates: n, mean, variance, std_error: (variance / n as f64).sqrt(), values })
    }

    /// `|value − mean|` in standard errors. Infinite when the standard error
    /// is zero and the values differ.
    pub fn z_score(&self, value: f64) -> f64 {
        let diff = (value - self.mean).abs();
        if diff == 0.0 {
            0.0
        } else {
            diff / self.std_error
        }
    }
}

/// `ψ_uv` of one sample, with `κ` in event units.
pub fn sample_psi(sample: &PatternSample, kappa: f64, mode: Normalization, level: FeatureLevel) -> f64 {
    let (count, effect) = pair_effects(&sample.u_positions, &sample.v_positions, kappa / sample.resolution as f64);
    if count == 0 {
        return 0.0;
    }
    let w0 = match mode {
        Normalization::LengthSensitive => count as f64,
        Normalization::LengthInsensitive => count as f64 / sample.length_units(),
    };
    let ratio = effect / w0;
    match level {
        FeatureLevel::PreRoot => ratio,
        FeatureLevel::Rooted => ratio.powf(1.0 / kappa),
    }
}

/// Monte Carlo moments of the pre-root `ψ_uv`. Replicate `i` uses seed
/// `seed + i`, so results do not depend on scheduling.
pub fn monte_carlo_psi(
    params: &PatternParams,
    mode: Normalization,
    replicates: usize,
    seed: u64,
) -> Result<MonteCarloSummary> {
    monte_carlo_psi_at(params, mode, FeatureLevel::PreRoot, replicates, seed)
}

pub fn monte_carlo_psi_at(
    params: &PatternParams,
    mode: Normalization,
    level: FeatureLevel,
    replicates: usize,
    seed: u64,
) -> Result<MonteCarloSummary> {
    params.validate()?;
    if replicates < 2 {
        return Err(TheoryError::InvalidParams(format!("need at least 2 replicates, got {replicates}")));
    }
    let values = (0..replicates)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            simulate_pattern(params, &mut rng).map(|s| sample_psi(&s, params.kappa, mode, level))
        })
        .collect::<Result<Vec<_>>>()?;
    MonteCarloSummary::from_values(values)
}

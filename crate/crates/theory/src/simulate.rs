use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use sgt_core::{AlphabetIndex, Sequence};

use crate::error::{Result, TheoryError};
use crate::params::PatternParams;

/// Filler tokens used when a pattern is materialized as a sequence.
const FILLERS: [&str; 3] = ["f0", "f1", "f2"];

/// Positions of `u` and `v` in one draw from the pattern model.
///
/// Positions are grid ticks (`resolution` ticks per event unit). The `k`-th
/// `v` sits between the `k`-th and `(k+1)`-th `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternSample {
    pub u_positions: Vec<usize>,
    pub v_positions: Vec<usize>,
    pub length_ticks: usize,
    pub resolution: u32,
}

impl PatternSample {
    /// Sequence length in event units.
    pub fn length_units(&self) -> f64 {
        self.length_ticks as f64 / self.resolution as f64
    }

    /// Smallest realized `u → v` gap in event units.
    pub fn min_short_gap(&self) -> f64 {
        self.u_positions
            .iter()
            .zip(&self.v_positions)
            .map(|(u, v)| v - u)
            .min()
            .unwrap_or(0) as f64
            / self.resolution as f64
    }
}

pub(crate) fn normal(mean: f64, sd: f64) -> Result<Normal<f64>> {
    Normal::new(mean, sd).map_err(|e| TheoryError::InvalidParams(e.to_string()))
}

pub(crate) fn ticks(value: f64, resolution: u32) -> usize {
    (value * resolution as f64).round().max(0.0) as usize
}

/// Draws `round(p·L)` pattern repetitions.
///
/// The short gap is at least one tick and the long gap at least one tick
/// more than the short gap, so pairs never interleave. The sequence extends
/// to `L` units, or just past the last `v` when the pattern overruns.
pub fn simulate_pattern<R: Rng + ?Sized>(params: &PatternParams, rng: &mut R) -> Result<PatternSample> {
    params.validate()?;
    let short = normal(params.mu_alpha, params.sigma_alpha)?;
    let long = normal(params.mu_beta, params.sigma_beta)?;
    let res = params.resolution;
    let pairs = params.simulated_pairs();

    let mut u_positions = Vec::with_capacity(pairs);
    let mut v_positions = Vec::with_capacity(pairs);
    let mut anchor = 0usize;
    for k in 0..pairs {
        let x = ticks(short.sample(rng), res).max(1);
        u_positions.push(anchor);
        v_positions.push(anchor + x);
        if k + 1 < pairs {
            let y = ticks(long.sample(rng), res).max(x + 1);
            anchor += y;
        }
    }
    let last = *v_positions.last().expect("at least one pair");
    let length_ticks = (params.length * res as usize).max(last + 1);
    Ok(PatternSample { u_positions, v_positions, length_ticks, resolution: res })
}

/// Materializes one draw as a sequence over `{f0, f1, f2, u, v}`.
///
/// Every position that is not a `u` or `v` gets a uniform filler token.
/// Positions are ticks, so with `resolution > 1` the transform should use
/// `κ / resolution`.
pub fn simulate_assumption1(params: &PatternParams, seed: u64) -> Result<(Sequence, AlphabetIndex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = simulate_pattern(params, &mut rng)?;
    let alphabet = AlphabetIndex::new(FILLERS.iter().copied().chain(["u", "v"]))?;
    let u = alphabet.id("u").expect("u present");
    let v = alphabet.id("v").expect("v present");

    let mut events: Vec<usize> = (0..sample.length_ticks).map(|_| rng.random_range(0..FILLERS.len())).collect();
    for &i in &sample.u_positions {
        events[i] = u;
    }
    for &j in &sample.v_positions {
        events[j] = v;
    }
    let seq = Sequence::new(format!("sim{seed}"), events, &alphabet)?;
    Ok((seq, alphabet))
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Distribution;
use rayon::prelude::*;
use sgt_core::Normalization;

use crate::error::{Result, TheoryError};
use crate::monte_carlo::{sample_psi, FeatureLevel};
use crate::params::PatternParams;
use crate::simulate::{normal, ticks, PatternSample};

/// `Δ(κ) = E[ψ_uv − ψ_uw]` at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationPoint {
    pub kappa: f64,
    /// Mean difference of the rooted features.
    pub delta: f64,
    pub std_error: f64,
    /// Mean difference of the pre-root ratios.
    pub raw_delta: f64,
    /// Whether `κ·d > 1` held for every realized gap.
    pub condition_met: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeparationReport {
    pub points: Vec<SeparationPoint>,
    /// Smallest realized short gap across replicates, in event units.
    pub min_gap: f64,
}

impl SeparationReport {
    pub fn deltas(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.delta).collect()
    }

    pub fn is_increasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].delta > w[0].delta)
    }
}

/// One draw with `u` followed by a near `v` and a far `w`.
struct Triplet {
    near: PatternSample,
    far: PatternSample,
}

fn simulate_triplet(near: &PatternParams, far: &PatternParams, rng: &mut ChaCha8Rng) -> Result<Triplet> {
    let near_gap = normal(near.mu_alpha, near.sigma_alpha)?;
    let far_gap = normal(far.mu_alpha, far.sigma_alpha)?;
    let period = normal(near.mu_beta, near.sigma_beta)?;
    let res = near.resolution;
    let pairs = near.simulated_pairs();

    let mut u = Vec::with_capacity(pairs);
    let mut v = Vec::with_capacity(pairs);
    let mut w = Vec::with_capacity(pairs);
    let mut anchor = 0usize;
    for k in 0..pairs {
        let mut x_near = ticks(near_gap.sample(rng), res).max(1);
        let mut x_far = ticks(far_gap.sample(rng), res).max(1);
        if x_near == x_far {
            if rng.random_bool(0.5) {
                x_near += 1;
            } else {
                x_far += 1;
            }
        }
        u.push(anchor);
        v.push(anchor + x_near);
        w.push(anchor + x_far);
        if k + 1 < pairs {
            anchor += ticks(period.sample(rng), res).max(x_near.max(x_far) + 1);
        }
    }
    let last = v.last().max(w.last()).copied().expect("at least one pair");
    let length_ticks = (near.length * res as usize).max(last + 1);
    let sample = |second| PatternSample { u_positions: u.clone(), v_positions: second, length_ticks, resolution: res };
    Ok(Triplet { near: sample(v.clone()), far: sample(w) })
}

/// Monte Carlo estimate of `Δ(κ)` over `kappa_grid`, in grid order.
///
/// `near` supplies the `u → v` gap, the period and the pair count; `far`
/// supplies the `u → w` gap. The same draws are reused for every `κ`.
/// `κ` values in the parameter structs are ignored.
pub fn delta_separation(
    near: &PatternParams,
    far: &PatternParams,
    kappa_grid: &[f64],
    mode: Normalization,
    replicates: usize,
    seed: u64,
) -> Result<SeparationReport> {
    near.validate()?;
    far.validate()?;
    if near.mu_alpha > far.mu_alpha {
        return Err(TheoryError::InvalidParams(format!(
            "near gap mean {} exceeds far gap mean {}",
            near.mu_alpha, far.mu_alpha
        )));
    }
    if kappa_grid.is_empty() || kappa_grid.iter().any(|k| !(k.is_finite() && *k > 0.0)) {
        return Err(TheoryError::InvalidParams("kappa grid must be non-empty and positive".into()));
    }
    if replicates < 2 {
        return Err(TheoryError::InvalidParams(format!("need at least 2 replicates, got {replicates}")));
    }

    let draws = (0..replicates)
        .into_par_iter()
        .map(|i| simulate_triplet(near, far, &mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64))))
        .collect::<Result<Vec<_>>>()?;
    let min_gap = draws
        .iter()
        .map(|t| t.near.min_short_gap().min(t.far.min_short_gap()))
        .fold(f64::INFINITY, f64::min);

    let n = replicates as f64;
    let points = kappa_grid
        .iter()
        .map(|&kappa| {
            let diffs: Vec<(f64, f64)> = draws
                .iter()
                .map(|t| {
                    let rooted = sample_psi(&t.near, kappa, mode, FeatureLevel::Rooted)
                        - sample_psi(&t.far, kappa, mode, FeatureLevel::Rooted);
                    let raw = sample_psi(&t.near, kappa, mode, FeatureLevel::PreRoot)
                        - sample_psi(&t.far, kappa, mode, FeatureLevel::PreRoot);
                    (rooted, raw)
                })
                .collect();
            let delta = diffs.iter().map(|d| d.0).sum::<f64>() / n;
            let raw_delta = diffs.iter().map(|d| d.1).sum::<f64>() / n;
            let var = diffs.iter().map(|d| (d.0 - delta).powi(2)).sum::<f64>() / (n - 1.0);
            SeparationPoint { kappa, delta, std_error: (var / n).sqrt(), raw_delta, condition_met: kappa * min_gap > 1.0 }
        })
        .collect();
    Ok(SeparationReport { points, min_gap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gap(mu_alpha: f64, sigma_alpha: f64) -> PatternParams {
        PatternParams {
            mu_alpha,
            sigma_alpha,
            mu_beta: 12.0,
            sigma_beta: 0.0,
            p: 0.08,
            length: 500,
            kappa: 1.0,
            resolution: 1,
        }
    }

    #[test]
    fn deterministic_raw_delta_matches_kernel_difference() {
        // with no variance and a long period, raw ψ is dominated by the
        // first-neighbour term e^(-κd) scaled by the pair normalizer
        let report =
            delta_separation(&gap(2.0, 0.0), &gap(5.0, 0.0), &[1.0, 2.0, 3.0], Normalization::LengthSensitive, 2, 0)
                .unwrap();
        let m = 40.0;
        for point in &report.points {
            let k = point.kappa;
            let expected = ((-2.0 * k).exp() - (-5.0 * k).exp()) * m / (m * (m + 1.0) / 2.0);
            assert!((point.raw_delta - expected).abs() / expected < 0.02, "{k}: {} vs {expected}", point.raw_delta);
        }
        let raw: Vec<f64> = report.points.iter().map(|p| p.raw_delta).collect();
        assert!(raw[0] > raw[1] && raw[1] > raw[2]);
        assert!(report.is_increasing());
        assert_eq!(report.min_gap, 2.0);
        assert!(report.points.iter().all(|p| p.condition_met));
    }

    #[test]
    fn equal_gaps_give_no_separation() {
        let report =
            delta_separation(&gap(3.0, 0.5), &gap(3.0, 0.5), &[1.5, 3.0], Normalization::LengthSensitive, 400, 5)
                .unwrap();
        for point in &report.points {
            assert!(point.delta.abs() < 4.0 * point.std_error + 1e-12, "{point:?}");
        }
    }

    #[test]
    fn condition_flag_tracks_small_kappa() {
        let report =
            delta_separation(&gap(2.0, 0.0), &gap(5.0, 0.0), &[0.25, 1.0], Normalization::LengthSensitive, 2, 0)
                .unwrap();
        assert!(!report.points[0].condition_met);
        assert!(report.points[1].condition_met);
    }

    #[test]
    fn rejects_reversed_gaps() {
        assert!(delta_separation(&gap(5.0, 0.0), &gap(2.0, 0.0), &[1.0], Normalization::LengthSensitive, 2, 0).is_err());
    }
}

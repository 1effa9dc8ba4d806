//! The per-sequence feature matrix and its flat vector form.

use std::ops::Deref;

use crate::config::{Normalization, SgtConfig};
use crate::error::{Result, SgtError};

/// Pre-root sums kept alongside a feature matrix.
///
/// `counts[u*n+v]` is the raw pair count `|Λ_uv|` and `effects[u*n+v]` the
/// summed decayed effects `Σ e^(−κ(m−l))` over those pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Accumulators {
    pub counts: Vec<u64>,
    pub effects: Vec<f64>,
}

/// `|V|×|V|` feature matrix `Ψ` of one sequence, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SgtMatrix {
    size: usize,
    psi: Vec<f64>,
    accumulators: Option<Accumulators>,
    config: SgtConfig,
    seq_length: usize,
}

impl SgtMatrix {
    /// Normalizes and roots the accumulated sums. Cells with no pair are 0.
    pub(crate) fn from_accumulators(
        size: usize,
        acc: Accumulators,
        config: SgtConfig,
        seq_length: usize,
    ) -> Self {
        let psi = acc
            .counts
            .iter()
            .zip(&acc.effects)
            .map(|(&count, &effect)| feature_value(count, effect, &config, seq_length))
            .collect();
        Self { size, psi, accumulators: Some(acc), config, seq_length }
    }

    /// Wraps an already computed feature matrix (e.g. an aggregate or a
    /// cluster centroid). The result carries no accumulators.
    pub fn from_psi(size: usize, psi: Vec<f64>, config: SgtConfig, seq_length: usize) -> Result<Self> {
        if psi.len() != size * size {
            return Err(SgtError::invalid(format!(
                "feature matrix of {} values cannot be {size}x{size}",
                psi.len()
            )));
        }
        if let Some(bad) = psi.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(SgtError::invalid(format!("feature values must be finite and non-negative, got {bad}")));
        }
        Ok(Self { size, psi, accumulators: None, config, seq_length })
    }

    /// Inverse of [`SgtMatrix::vectorize`].
    pub fn from_vector(vector: &FeatureVector, config: SgtConfig, seq_length: usize) -> Result<Self> {
        let size = (vector.len() as f64).sqrt().round() as usize;
        Self::from_psi(size, vector.to_vec(), config, seq_length)
    }

    /// Element-wise mean of `psi` over several matrices of the same size.
    pub fn mean_of(matrices: &[SgtMatrix]) -> Result<Self> {
        let first = matrices.first().ok_or(SgtError::EmptyInput)?;
        let mut psi = vec![0.0; first.psi.len()];
        for m in matrices {
            if m.size != first.size {
                return Err(SgtError::invalid("cannot aggregate matrices of different sizes"));
            }
            for (acc, &x) in psi.iter_mut().zip(&m.psi) {
                *acc += x;
            }
        }
        let n = matrices.len() as f64;
        psi.iter_mut().for_each(|x| *x /= n);
        let mean_len = matrices.iter().map(|m| m.seq_length).sum::<usize>() / matrices.len();
        Self::from_psi(first.size, psi, first.config, mean_len)
    }

    /// Alphabet size `|V|`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn psi(&self) -> &[f64] {
        &self.psi
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.psi[u * self.size + v]
    }

    pub fn config(&self) -> &SgtConfig {
        &self.config
    }

    pub fn seq_length(&self) -> usize {
        self.seq_length
    }

    pub fn accumulators(&self) -> Option<&Accumulators> {
        self.accumulators.as_ref()
    }

    /// Raw pair count `|Λ_uv|`, if accumulators are present.
    pub fn pair_count(&self, u: usize, v: usize) -> Option<u64> {
        self.accumulators.as_ref().map(|a| a.counts[u * self.size + v])
    }

    /// Summed effects `W⁽κ⁾_uv`.
    pub fn wkappa(&self, u: usize, v: usize) -> Option<f64> {
        self.accumulators.as_ref().map(|a| a.effects[u * self.size + v])
    }

    /// Normalization denominator `W⁽⁰⁾_uv`: `|Λ_uv|`, or `|Λ_uv|/L` when
    /// length-insensitive.
    pub fn w0(&self, u: usize, v: usize) -> Option<f64> {
        self.pair_count(u, v).map(|c| denominator(c, self.config.normalization, self.seq_length))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..self.size).all(|u| {
            (u + 1..self.size).all(|v| {
                let (a, b) = (self.get(u, v), self.get(v, u));
                (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
            })
        })
    }

    /// Row-major flattening, cell `(u, v)` at index `u·|V| + v`.
    pub fn vectorize(&self) -> FeatureVector {
        FeatureVector(self.psi.clone())
    }

    pub(crate) fn with_parts(
        size: usize,
        psi: Vec<f64>,
        accumulators: Option<Accumulators>,
        config: SgtConfig,
        seq_length: usize,
    ) -> Self {
        Self { size, psi, accumulators, config, seq_length }
    }
}

fn denominator(count: u64, normalization: Normalization, seq_length: usize) -> f64 {
    match normalization {
        Normalization::LengthSensitive => count as f64,
        Normalization::LengthInsensitive => count as f64 / seq_length as f64,
    }
}

/// `(W⁽κ⁾ / W⁽⁰⁾)^(1/κ)`, or exactly 0 for a pair that never occurs.
pub(crate) fn feature_value(count: u64, effect: f64, config: &SgtConfig, seq_length: usize) -> f64 {
    if count == 0 {
        return 0.0;
    }
    let ratio = effect / denominator(count, config.normalization, seq_length);
    if config.kappa() == 1.0 {
        ratio
    } else {
        ratio.powf(1.0 / config.kappa())
    }
}

/// A vectorized feature matrix of length `|V|²`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FeatureVector(pub Vec<f64>);

impl FeatureVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for FeatureVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl AsRef<[f64]> for FeatureVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for FeatureVector {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

use crate::error::{Result, SgtError};

/// How the pair count is normalized.
///
/// `LengthSensitive` divides the summed effects by the raw pair count
/// `|Λ_uv|`; `LengthInsensitive` divides by `|Λ_uv| / L`, which removes the
/// dependence of the feature on sequence length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    #[default]
    LengthSensitive,
    LengthInsensitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Directionality {
    #[default]
    Directed,
    /// Exact recombination of both pair orders from the accumulators.
    Undirected,
    /// `(Ψ + Ψᵀ) / 2` on the final features.
    UndirectedApprox,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    /// Dense when `L < |V|²`, positional otherwise.
    #[default]
    Auto,
    /// All-pairs scan over event positions, `O(L²)`.
    Dense,
    /// Per-alphabet position lists, `O(|V| (L + |V|))`.
    Positional,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SgtConfig {
    kappa: f64,
    pub normalization: Normalization,
    pub directionality: Directionality,
    pub algorithm: Algorithm,
}

impl SgtConfig {
    pub fn new(kappa: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(SgtError::invalid(format!("kappa must be a positive finite number, got {kappa}")));
        }
        Ok(Self {
            kappa,
            normalization: Normalization::default(),
            directionality: Directionality::default(),
            algorithm: Algorithm::default(),
        })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn with_kappa(self, kappa: f64) -> Result<Self> {
        Ok(Self { kappa: Self::new(kappa)?.kappa, ..self })
    }

    pub fn with_normalization(self, normalization: Normalization) -> Self {
        Self { normalization, ..self }
    }

    pub fn with_directionality(self, directionality: Directionality) -> Self {
        Self { directionality, ..self }
    }

    pub fn with_algorithm(self, algorithm: Algorithm) -> Self {
        Self { algorithm, ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_must_be_positive() {
        assert!(SgtConfig::new(0.0).is_err());
        assert!(SgtConfig::new(-1.0).is_err());
        assert!(SgtConfig::new(f64::NAN).is_err());
        assert!(SgtConfig::new(f64::INFINITY).is_err());
        let cfg = SgtConfig::new(5.0).unwrap();
        assert_eq!(cfg.kappa(), 5.0);
        assert_eq!(cfg.normalization, Normalization::LengthSensitive);
        assert!(cfg.with_kappa(0.0).is_err());
    }
}

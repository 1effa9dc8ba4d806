use sgt_core::Normalization;

use crate::error::{Result, TheoryError};
use crate::params::PatternParams;

/// Intermediate quantities of the closed-form moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormTerms {
    /// `κμ_α − κ²σ_α²/2`
    pub mu_tilde_alpha: f64,
    /// `κμ_β − κ²σ_β²/2`
    pub mu_tilde_beta: f64,
    /// `κμ_α − κ²σ_α²`
    pub mu_tilde_alpha_prime: f64,
    /// `κμ_β − κ²σ_β²`
    pub mu_tilde_beta_prime: f64,
    /// Ratio carrying the short-gap (numerator) and long-gap (denominator)
    /// information.
    pub gamma: f64,
    /// Variance bracket.
    pub pi: f64,
    /// Expected first-neighbour pair count `p·L`.
    pub m: f64,
}

impl ClosedFormTerms {
    pub fn new(params: &PatternParams) -> Result<Self> {
        params.validate()?;
        let k = params.kappa;
        let mu_tilde_alpha = k * params.mu_alpha - 0.5 * k * k * params.sigma_alpha.powi(2);
        let mu_tilde_beta = k * params.mu_beta - 0.5 * k * k * params.sigma_beta.powi(2);
        let mu_tilde_alpha_prime = k * params.mu_alpha - k * k * params.sigma_alpha.powi(2);
        let mu_tilde_beta_prime = k * params.mu_beta - k * k * params.sigma_beta.powi(2);
        let m = params.pair_density_count();

        if mu_tilde_beta == 0.0 {
            return Err(TheoryError::Domain("κμ_β − κ²σ_β²/2 is zero".into()));
        }
        let r = (-mu_tilde_beta).exp();
        let tail = (1.0 - (-m * mu_tilde_beta).exp()) / (m * (mu_tilde_beta.exp() - 1.0));
        let denom = ((1.0 - r) * (1.0 - tail)).abs();
        let gamma = (-mu_tilde_alpha).exp() / denom;
        if !gamma.is_finite() || denom == 0.0 {
            return Err(TheoryError::Domain("gamma denominator vanishes".into()));
        }

        if mu_tilde_beta_prime == 0.0 {
            return Err(TheoryError::Domain("κμ_β − κ²σ_β² is zero".into()));
        }
        let bracket = |a: f64, b: f64| {
            let q = (-2.0 * b).exp();
            (-2.0 * a).exp() / (1.0 - q) * (m - q * (1.0 - (-2.0 * m * b).exp()) / (1.0 - q))
        };
        let pi = bracket(mu_tilde_alpha_prime, mu_tilde_beta_prime) - bracket(mu_tilde_alpha, mu_tilde_beta);
        if !pi.is_finite() {
            return Err(TheoryError::Domain("variance bracket is not finite".into()));
        }

        Ok(Self { mu_tilde_alpha, mu_tilde_beta, mu_tilde_alpha_prime, mu_tilde_beta_prime, gamma, pi, m })
    }
}

/// Closed-form `E[ψ_uv]`: `2γ/(pL+1)`, times `L` when length-insensitive.
pub fn expected_psi(params: &PatternParams, mode: Normalization) -> Result<f64> {
    let t = ClosedFormTerms::new(params)?;
    let base = 2.0 / (t.m + 1.0) * t.gamma;
    Ok(match mode {
        Normalization::LengthSensitive => base,
        Normalization::LengthInsensitive => base * params.length as f64,
    })
}

/// Closed-form `var(ψ_uv)`.
pub fn variance_psi(params: &PatternParams, mode: Normalization) -> Result<f64> {
    let t = ClosedFormTerms::new(params)?;
    let prefactor = match mode {
        Normalization::LengthSensitive => 1.0 / (t.m * (t.m + 1.0) / 2.0),
        Normalization::LengthInsensitive => 1.0 / (params.p * (t.m + 1.0) / 2.0),
    };
    Ok(prefactor * prefactor * t.pi)
}

/// Large-`L` limit of the length-insensitive expectation,
/// `(2/p)·|e^(−μ̃_α) / (1 − e^(−μ̃_β))|`.
pub fn limit_expected_psi(params: &PatternParams) -> Result<f64> {
    let t = ClosedFormTerms::new(params)?;
    Ok(2.0 / params.p * ((-t.mu_tilde_alpha).exp() / (1.0 - (-t.mu_tilde_beta).exp())).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::reference;

    /// Direct finite sum `Σ_m (M−m+1) e^(−μ̃_α−(m−1)μ̃_β) / (M(M+1)/2)`.
    fn finite_sum(params: &PatternParams) -> f64 {
        let t = ClosedFormTerms::new(params).unwrap();
        let m = params.simulated_pairs();
        let total: f64 = (1..=m)
            .map(|k| (m - k + 1) as f64 * (-t.mu_tilde_alpha - (k - 1) as f64 * t.mu_tilde_beta).exp())
            .sum();
        total / (m * (m + 1) / 2) as f64
    }

    #[test]
    fn expectation_tracks_the_finite_sum() {
        for kappa in [1.0, 5.0, 10.0] {
            let p = reference().with_kappa(kappa);
            let closed = expected_psi(&p, Normalization::LengthSensitive).unwrap();
            let direct = finite_sum(&p);
            assert!((closed - direct).abs() / direct < 1e-3, "kappa {kappa}: {closed} vs {direct}");
        }
    }

    #[test]
    fn large_kappa_drops_the_long_gap_term() {
        let p = PatternParams { sigma_alpha: 0.0, sigma_beta: 0.0, kappa: 20.0, ..reference() };
        let closed = expected_psi(&p, Normalization::LengthSensitive).unwrap();
        let short_only = 2.0 / (p.pair_density_count() + 1.0) * (-p.kappa * p.mu_alpha).exp();
        assert!((closed - short_only).abs() / short_only < 1e-12);
    }

    #[test]
    fn insensitive_expectation_approaches_limit() {
        let p = reference().with_length(10_000);
        let e = expected_psi(&p, Normalization::LengthInsensitive).unwrap();
        let limit = limit_expected_psi(&p).unwrap();
        assert!((e - limit).abs() / limit < 0.01, "{e} vs {limit}");
    }

    #[test]
    fn variance_positive_and_decays_with_length() {
        let p = reference();
        assert!(variance_psi(&p, Normalization::LengthSensitive).unwrap() > 0.0);
        let short = variance_psi(&p.with_length(200), Normalization::LengthInsensitive).unwrap();
        let long = variance_psi(&p.with_length(2000), Normalization::LengthInsensitive).unwrap();
        assert!(long < short);
    }

    #[test]
    fn closer_patterns_raise_the_expectation() {
        let base = reference();
        let e = |p: &PatternParams| expected_psi(p, Normalization::LengthSensitive).unwrap();
        assert!(e(&PatternParams { mu_alpha: 0.8, ..base }) > e(&base));
        assert!(e(&PatternParams { mu_beta: 4.0, ..base }) > e(&base));
        assert!(e(&PatternParams { mu_alpha: 1.5, ..base }) < e(&base));
        assert!(e(&PatternParams { mu_beta: 7.0, ..base }) < e(&base));
    }

    #[test]
    fn singular_points_are_domain_errors() {
        // κμ_β = κ²σ_β²/2 with κ = 1: μ_β = σ_β²/2
        let p = PatternParams { mu_alpha: 1.0, mu_beta: 2.0, sigma_beta: 2.0, ..reference() };
        assert!(matches!(expected_psi(&p, Normalization::LengthSensitive), Err(TheoryError::Domain(_))));
        // κμ_β = κ²σ_β²: μ_β = σ_β²
        let q = PatternParams { mu_alpha: 1.0, mu_beta: 4.0, sigma_beta: 2.0, ..reference() };
        assert!(matches!(variance_psi(&q, Normalization::LengthSensitive), Err(TheoryError::Domain(_))));
    }
}

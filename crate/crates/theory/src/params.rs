use crate::error::{Result, TheoryError};

/// Parameters of the two-gap pattern model.
///
/// Gaps are in event units. `p` is the density of `(u, v)` first-neighbour
/// pairs, so a sequence of length `length` carries `M = p·L` of them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternParams {
    pub mu_alpha: f64,
    pub sigma_alpha: f64,
    pub mu_beta: f64,
    pub sigma_beta: f64,
    pub p: f64,
    pub length: usize,
    pub kappa: f64,
    /// Grid ticks per event unit used when simulating. With 1, gaps are
    /// whole events; larger values approximate continuous gaps and the
    /// simulated positions are in ticks.
    pub resolution: u32,
}

impl PatternParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(TheoryError::InvalidParams(msg));
        let finite = [self.mu_alpha, self.sigma_alpha, self.mu_beta, self.sigma_beta, self.p, self.kappa];
        if finite.iter().any(|x| !x.is_finite()) {
            return bad("all parameters must be finite".into());
        }
        if !(self.mu_alpha < self.mu_beta) {
            return bad(format!("need mu_alpha < mu_beta, got {} and {}", self.mu_alpha, self.mu_beta));
        }
        if self.sigma_alpha < 0.0 || self.sigma_beta < 0.0 {
            return bad("standard deviations must be non-negative".into());
        }
        if self.mu_alpha <= 0.0 {
            return bad(format!("mu_alpha must be positive, got {}", self.mu_alpha));
        }
        if self.p <= 0.0 {
            return bad(format!("p must be positive, got {}", self.p));
        }
        if self.length == 0 {
            return bad("length must be at least 1".into());
        }
        if self.kappa <= 0.0 {
            return bad(format!("kappa must be positive, got {}", self.kappa));
        }
        if self.resolution == 0 {
            return bad("resolution must be at least 1".into());
        }
        Ok(())
    }

    /// Expected number of first-neighbour pairs `M = p·L`.
    pub fn pair_density_count(&self) -> f64 {
        self.p * self.length as f64
    }

    /// Number of pairs a simulated sequence carries: `round(p·L)`, at least 1.
    pub fn simulated_pairs(&self) -> usize {
        (self.pair_density_count().round() as usize).max(1)
    }

    pub fn with_kappa(self, kappa: f64) -> Self {
        Self { kappa, ..self }
    }

    pub fn with_length(self, length: usize) -> Self {
        Self { length, ..self }
    }

    pub fn with_resolution(self, resolution: u32) -> Self {
        Self { resolution, ..self }
    }
}

#[cfg(test)]
pub(crate) fn reference() -> PatternParams {
    PatternParams {
        mu_alpha: 1.0,
        sigma_alpha: 0.1,
        mu_beta: 5.0,
        sigma_beta: 0.5,
        p: 0.1,
        length: 500,
        kappa: 1.0,
        resolution: 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(reference().validate().is_ok());
        assert!(PatternParams { mu_alpha: 6.0, ..reference() }.validate().is_err());
        assert!(PatternParams { sigma_beta: -1.0, ..reference() }.validate().is_err());
        assert!(PatternParams { p: 0.0, ..reference() }.validate().is_err());
        assert!(PatternParams { length: 0, ..reference() }.validate().is_err());
        assert!(PatternParams { kappa: 0.0, ..reference() }.validate().is_err());
        assert!(PatternParams { resolution: 0, ..reference() }.validate().is_err());
        assert_eq!(reference().simulated_pairs(), 50);
    }
}

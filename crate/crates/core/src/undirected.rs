use crate::config::Directionality;
use crate::error::{Result, SgtError};
use crate::matrix::{feature_value, Accumulators, SgtMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndirectedMode {
    /// Pools both pair orders: `(W_uv + W_vu) / (W⁽⁰⁾_uv + W⁽⁰⁾_vu)`, rooted.
    Exact,
    /// `(Ψ + Ψᵀ) / 2` on the final features.
    Approximate,
}

/// Symmetric feature matrix ignoring event order.
///
/// Exact mode needs a directed matrix that still carries its accumulators;
/// the result keeps the pooled accumulators. Approximate mode works on any
/// matrix and drops them.
pub fn make_undirected(sgt: &SgtMatrix, mode: UndirectedMode) -> Result<SgtMatrix> {
    let n = sgt.size();
    match mode {
        UndirectedMode::Exact => {
            if sgt.config().directionality != Directionality::Directed {
                return Err(SgtError::State("exact undirected recombination needs a directed matrix".into()));
            }
            let acc = sgt
                .accumulators()
                .ok_or_else(|| SgtError::State("matrix carries no accumulators".into()))?;
            let mut counts = vec![0u64; n * n];
            let mut effects = vec![0.0f64; n * n];
            for u in 0..n {
                for v in 0..n {
                    counts[u * n + v] = acc.counts[u * n + v] + acc.counts[v * n + u];
                    effects[u * n + v] = acc.effects[u * n + v] + acc.effects[v * n + u];
                }
            }
            let config = sgt.config().with_directionality(Directionality::Undirected);
            let psi = counts
                .iter()
                .zip(&effects)
                .map(|(&c, &e)| feature_value(c, e, &config, sgt.seq_length()))
                .collect();
            Ok(SgtMatrix::with_parts(n, psi, Some(Accumulators { counts, effects }), config, sgt.seq_length()))
        }
        UndirectedMode::Approximate => {
            let psi = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .map(|(u, v)| 0.5 * (sgt.get(u, v) + sgt.get(v, u)))
                .collect();
            let config = sgt.config().with_directionality(Directionality::UndirectedApprox);
            Ok(SgtMatrix::with_parts(n, psi, None, config, sgt.seq_length()))
        }
    }
}

//! Feature computation for a single sequence.
//!
//! Two algorithms produce the same matrix. [`transform_dense`] scans every
//! ordered position pair and costs `O(L²)`. [`transform_positional`] groups
//! positions by alphabet and, for each alphabet pair, sums the decayed
//! effects over `{(i, j) : i ∈ U, j ∈ V, j > i}` with a single merge sweep
//! over the two position lists, so an alphabet pair costs `O(|U| + |V|)` and
//! the whole matrix `O(|V| (L + |V|))`.

use crate::config::{Algorithm, Directionality, SgtConfig};
use crate::error::{Result, SgtError};
use crate::matrix::{Accumulators, SgtMatrix};
use crate::sequence::Sequence;
use crate::undirected::{make_undirected, UndirectedMode};

/// Effect of an earlier event on a later one at distance `d`: `e^(−κd)`.
pub fn phi(distance: f64, kappa: f64) -> Result<f64> {
    if !(distance > 0.0 && distance.is_finite()) {
        return Err(SgtError::invalid(format!("distance must be positive, got {distance}")));
    }
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(SgtError::invalid(format!("kappa must be positive, got {kappa}")));
    }
    Ok((-kappa * distance).exp())
}

/// The ordered position pairs `(l, m)`, `l < m`, with `s_l = u` and `s_m = v`.
/// Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairInstanceSet {
    pub pairs: Vec<(usize, usize)>,
}

impl PairInstanceSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Enumerates `Λ_uv` for `seq`, ordered by the later position then the earlier.
pub fn pair_instances(seq: &Sequence, u: usize, v: usize, alphabet_size: usize) -> Result<PairInstanceSet> {
    if u >= alphabet_size || v >= alphabet_size {
        return Err(SgtError::invalid(format!(
            "alphabet ids ({u}, {v}) out of range for alphabet of size {alphabet_size}"
        )));
    }
    let events = seq.events();
    let mut pairs = Vec::new();
    for (m, &ev) in events.iter().enumerate() {
        if ev != v {
            continue;
        }
        for (l, &eu) in events[..m].iter().enumerate() {
            if eu == u {
                pairs.push((l + 1, m + 1));
            }
        }
    }
    Ok(PairInstanceSet { pairs })
}

fn check_inputs(seq: &Sequence, alphabet_size: usize) -> Result<()> {
    if seq.is_empty() {
        return Err(SgtError::invalid("cannot transform an empty sequence"));
    }
    if let Some(&bad) = seq.events().iter().find(|&&e| e >= alphabet_size) {
        return Err(SgtError::invalid(format!(
            "sequence {:?}: event id {bad} out of range for alphabet of size {alphabet_size}",
            seq.id()
        )));
    }
    Ok(())
}

/// Directed feature matrix by the all-pairs scan. Ignores `config.algorithm`
/// and `config.directionality`.
pub fn transform_dense(seq: &Sequence, alphabet_size: usize, config: &SgtConfig) -> Result<SgtMatrix> {
    check_inputs(seq, alphabet_size)?;
    let n = alphabet_size;
    let events = seq.events();
    let len = events.len();
    let decay: Vec<f64> = (0..len).map(|d| (-config.kappa() * d as f64).exp()).collect();

    let mut counts = vec![0u64; n * n];
    let mut effects = vec![0.0f64; n * n];
    for (i, &u) in events.iter().enumerate() {
        let row = u * n;
        for (j, &v) in events.iter().enumerate().skip(i + 1) {
            counts[row + v] += 1;
            effects[row + v] += decay[j - i];
        }
    }
    Ok(SgtMatrix::from_accumulators(n, Accumulators { counts, effects }, directed(config), len))
}

/// Directed feature matrix from per-alphabet position lists. Ignores
/// `config.algorithm` and `config.directionality`.
pub fn transform_positional(seq: &Sequence, alphabet_size: usize, config: &SgtConfig) -> Result<SgtMatrix> {
    check_inputs(seq, alphabet_size)?;
    let n = alphabet_size;
    let positions = seq.alphabet_positions(n);
    let mut counts = vec![0u64; n * n];
    let mut effects = vec![0.0f64; n * n];
    for (u, first) in positions.iter().enumerate() {
        if first.is_empty() {
            continue;
        }
        for (v, second) in positions.iter().enumerate() {
            if second.is_empty() {
                continue;
            }
            let (count, effect) = pair_effects(first, second, config.kappa());
            counts[u * n + v] = count;
            effects[u * n + v] = effect;
        }
    }
    Ok(SgtMatrix::from_accumulators(n, Accumulators { counts, effects }, directed(config), seq.len()))
}

/// Pair count and summed effect `Σ e^(−κ(j−i))` over `i ∈ first`,
/// `j ∈ second`, `j > i`.
///
/// Both slices must be sorted ascending; they may be the same list. Any
/// position unit works since only differences enter, which lets callers run
/// the sweep on sparse or sub-event grids.
pub fn pair_effects(first: &[usize], second: &[usize], kappa: f64) -> (u64, f64) {
    // `running` holds Σ e^(−κ(anchor − i)) for every `i` consumed so far.
    let mut running = 0.0f64;
    let mut anchor = 0usize;
    let mut seen = 0u64;
    let mut next = 0usize;
    let mut count = 0u64;
    let mut effect = 0.0f64;
    for &j in second {
        while next < first.len() && first[next] < j {
            let i = first[next];
            running = if seen == 0 { 1.0 } else { running * (-kappa * (i - anchor) as f64).exp() + 1.0 };
            anchor = i;
            seen += 1;
            next += 1;
        }
        if seen > 0 {
            count += seen;
            effect += running * (-kappa * (j - anchor) as f64).exp();
        }
    }
    (count, effect)
}

/// Algorithm picked by [`Algorithm::Auto`]: dense iff `L < |V|²`.
pub fn select_algorithm(seq_length: usize, alphabet_size: usize, requested: Algorithm) -> Algorithm {
    match requested {
        Algorithm::Auto if seq_length < alphabet_size.saturating_mul(alphabet_size) => Algorithm::Dense,
        Algorithm::Auto => Algorithm::Positional,
        explicit => explicit,
    }
}

/// Feature matrix of `seq` under `config`, including the undirected
/// post-processing `config.directionality` asks for.
pub fn transform(seq: &Sequence, alphabet_size: usize, config: &SgtConfig) -> Result<SgtMatrix> {
    let directed = match select_algorithm(seq.len(), alphabet_size, config.algorithm) {
        Algorithm::Dense => transform_dense(seq, alphabet_size, config)?,
        _ => transform_positional(seq, alphabet_size, config)?,
    };
    match config.directionality {
        Directionality::Directed => Ok(directed),
        Directionality::Undirected => make_undirected(&directed, UndirectedMode::Exact),
        Directionality::UndirectedApprox => make_undirected(&directed, UndirectedMode::Approximate),
    }
}

fn directed(config: &SgtConfig) -> SgtConfig {
    config.with_directionality(Directionality::Directed)
}

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgt_core::{transform_corpus, AlphabetIndex, FeatureTable, Sequence, SgtConfig};

use crate::dbindex::davies_bouldin;
use crate::error::{invalid, Result};
use crate::kmeans::{ClusteringResult, KMeans};

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub nc_grid: Vec<usize>,
    pub kappa_grid: Vec<f64>,
    pub max_rounds: usize,
    pub seed: u64,
    /// k-means restarts per evaluation.
    pub restarts: usize,
    pub jobs: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { nc_grid: (2..=10).collect(), kappa_grid: vec![1.0, 5.0, 10.0], max_rounds: 10, seed: 0, restarts: 5, jobs: None }
    }
}

/// One round of the alternating search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchStep {
    pub round: usize,
    pub nc: usize,
    pub kappa: f64,
    pub db: f64,
    /// Lowest DB-index seen up to and including this round.
    pub best_db: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub best_nc: usize,
    pub best_kappa: f64,
    pub best_db: f64,
    pub clustering: ClusteringResult,
    pub history: Vec<SearchStep>,
}

struct Evaluator<'a> {
    corpus: &'a [Sequence],
    alphabet: &'a AlphabetIndex,
    template: &'a SgtConfig,
    config: &'a SearchConfig,
    tables: HashMap<u64, FeatureTable>,
    scores: HashMap<(usize, u64), (f64, ClusteringResult)>,
    best: Option<(usize, f64, f64, ClusteringResult)>,
}

impl Evaluator<'_> {
    fn eval(&mut self, nc: usize, kappa: f64) -> Result<f64> {
        let key = (nc, kappa.to_bits());
        if let Some((db, _)) = self.scores.get(&key) {
            return Ok(*db);
        }
        if !self.tables.contains_key(&kappa.to_bits()) {
            let config = self.template.with_kappa(kappa)?;
            let table = transform_corpus(self.corpus, self.alphabet, &config, self.config.jobs)?;
            self.tables.insert(kappa.to_bits(), table);
        }
        let table = &self.tables[&kappa.to_bits()];
        let result = KMeans::new(nc).with_seed(self.config.seed).with_restarts(self.config.restarts).fit(table.rows())?;
        let db = davies_bouldin(table, &result.assignment)?;
        if self.best.as_ref().is_none_or(|b| db < b.2) {
            self.best = Some((nc, kappa, db, result.clone()));
        }
        self.scores.insert(key, (db, result));
        Ok(db)
    }

    /// Grid element with the lowest score; earlier entries win ties.
    fn argmin<T: Copy>(&mut self, grid: &[T], mut score: impl FnMut(&mut Self, T) -> Result<f64>) -> Result<T> {
        let mut best = (grid[0], f64::INFINITY);
        for (i, &g) in grid.iter().enumerate() {
            let s = score(self, g)?;
            if i == 0 || s < best.1 {
                best = (g, s);
            }
        }
        Ok(best.0)
    }
}

/// Alternating search over `(n_c, κ)` minimizing the DB-index of Manhattan
/// k-means on SGT features.
///
/// Starts from a random `n_c`, picks the best `κ` for it, then the best
/// `n_c` for that `κ`, and repeats until the pair stops changing or
/// `max_rounds` is reached. Returns the best pair evaluated.
pub fn random_search(
    corpus: &[Sequence],
    alphabet: &AlphabetIndex,
    config: &SearchConfig,
    template: &SgtConfig,
) -> Result<SearchOutcome> {
    if config.nc_grid.is_empty() || config.kappa_grid.is_empty() {
        return invalid("search grids must be non-empty");
    }
    if config.max_rounds == 0 || config.restarts == 0 {
        return invalid("max_rounds and restarts must be at least 1");
    }
    if let Some(&bad) = config.nc_grid.iter().find(|&&nc| nc < 2 || nc >= corpus.len()) {
        return invalid(format!("n_c {bad} must be in 2..{} for {} sequences", corpus.len(), corpus.len()));
    }
    if let Some(bad) = config.kappa_grid.iter().find(|k| !(k.is_finite() && **k > 0.0)) {
        return invalid(format!("kappa {bad} must be positive"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut nc = config.nc_grid[rng.random_range(0..config.nc_grid.len())];
    let mut ev = Evaluator { corpus, alphabet, template, config, tables: HashMap::new(), scores: HashMap::new(), best: None };
    let mut history = Vec::new();
    let mut previous = None;

    for round in 1..=config.max_rounds {
        let kappa = ev.argmin(&config.kappa_grid, |ev, k| ev.eval(nc, k))?;
        nc = ev.argmin(&config.nc_grid, |ev, n| ev.eval(n, kappa))?;
        let db = ev.eval(nc, kappa)?;
        let best_db = ev.best.as_ref().map(|b| b.2).expect("evaluated at least once");
        history.push(SearchStep { round, nc, kappa, db, best_db });
        if previous == Some((nc, kappa.to_bits())) {
            break;
        }
        previous = Some((nc, kappa.to_bits()));
    }

    let (best_nc, best_kappa, best_db, clustering) = ev.best.expect("evaluated at least once");
    Ok(SearchOutcome { best_nc, best_kappa, best_db, clustering, history })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus() -> (Vec<Sequence>, AlphabetIndex) {
        let alphabet = AlphabetIndex::letters(4).unwrap();
        let texts = ["ABABABAB", "ABABABBA", "BABABABA", "CDCDCDCD", "CDCDDCDC", "DCDCDCDC"];
        let seqs = texts.iter().enumerate().map(|(i, t)| Sequence::from_chars(format!("s{i}"), t, &alphabet).unwrap()).collect();
        (seqs, alphabet)
    }

    #[test]
    fn single_point_grids() {
        let (seqs, alphabet) = corpus();
        let config = SearchConfig { nc_grid: vec![2], kappa_grid: vec![5.0], ..Default::default() };
        let out = random_search(&seqs, &alphabet, &config, &SgtConfig::new(1.0).unwrap()).unwrap();
        assert_eq!((out.best_nc, out.best_kappa), (2, 5.0));
        assert!(out.history.len() <= 2);
        assert_eq!(out.clustering.assignment[0], out.clustering.assignment[1]);
        assert_ne!(out.clustering.assignment[0], out.clustering.assignment[3]);
    }

    #[test]
    fn best_db_never_rises() {
        let (seqs, alphabet) = corpus();
        let config = SearchConfig { nc_grid: vec![2, 3, 4], ..Default::default() };
        let out = random_search(&seqs, &alphabet, &config, &SgtConfig::new(1.0).unwrap()).unwrap();
        assert!(out.history.windows(2).all(|w| w[1].best_db <= w[0].best_db));
        assert!(config.kappa_grid.contains(&out.best_kappa));
        assert_eq!(out.best_db, out.history.last().unwrap().best_db);
    }

    #[test]
    fn rejects_bad_grids() {
        let (seqs, alphabet) = corpus();
        let template = SgtConfig::new(1.0).unwrap();
        for config in [
            SearchConfig { nc_grid: vec![], ..Default::default() },
            SearchConfig { nc_grid: vec![1], ..Default::default() },
            SearchConfig { nc_grid: vec![6], ..Default::default() },
            SearchConfig { nc_grid: vec![2], kappa_grid: vec![-1.0], ..Default::default() },
        ] {
            assert!(random_search(&seqs, &alphabet, &config, &template).is_err());
        }
    }
}

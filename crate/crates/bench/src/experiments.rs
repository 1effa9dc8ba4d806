//! Repeatable evaluation runs over the synthetic corpora.

use std::time::Instant;

use sgt_core::{
    make_undirected, transform_all, transform_corpus, FeatureTable, Normalization, SgtConfig, SgtMatrix,
    UndirectedMode,
};
use sgt_mining::{random_search, spectral_alphabet_clusters, KMeans, SearchConfig};

use crate::error::Result;
use crate::generate::{gen_bicluster_corpus, gen_clustered_corpus, ClusterSpec, LabeledCorpus};
use crate::metrics::{clustering_f1, hungarian_max};
use crate::ngram::ngram_corpus;

/// k-means restarts used for every clustering in these runs.
pub const RESTARTS: usize = 50;

/// One scored clustering.
#[derive(Debug, Clone, PartialEq)]
pub struct F1Row {
    pub experiment: String,
    pub seed: u64,
    /// Overlap or noise level, depending on the experiment.
    pub setting: f64,
    pub method: String,
    pub f1: f64,
    pub runtime_ms: f64,
}

/// Clusters `table` into `k` groups and scores against `truth`.
pub fn kmeans_f1(table: &FeatureTable, truth: &[usize], k: usize, seed: u64) -> Result<f64> {
    let result = KMeans::new(k).with_seed(seed).with_restarts(RESTARTS).fit(table.rows())?;
    clustering_f1(&result.assignment, truth)
}

/// Rows minus the best one-to-one agreement between the two labelings.
pub fn misassigned(predicted: &[usize], truth: &[usize]) -> usize {
    let k = predicted.iter().chain(truth).max().map_or(0, |m| m + 1);
    let mut counts = vec![vec![0.0; k]; k];
    for (&p, &t) in predicted.iter().zip(truth) {
        counts[t][p] += 1.0;
    }
    let agreed: f64 =
        hungarian_max(&counts).iter().enumerate().filter_map(|(t, p)| p.map(|p| counts[t][p])).sum();
    truth.len() - agreed as usize
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_secs_f64() * 1e3))
}

/// Settings shared by the clustered-corpus experiments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    /// Sequences per cluster.
    pub count: usize,
    pub kappa: f64,
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { count: 40, kappa: 1.0, jobs: None }
    }
}

/// Five clusters with shared motifs: SGT versus 2-gram counts, both under
/// Manhattan k-means with the true `k`.
pub fn exp1(overlap: f64, seed: u64, run: &RunConfig) -> Result<Vec<F1Row>> {
    let spec = ClusterSpec::exp1(overlap, seed);
    let corpus = gen_clustered_corpus(&spec, run.count)?;
    let config = SgtConfig::new(run.kappa)?.with_normalization(Normalization::LengthInsensitive);
    let row = |method: &str, (f1, ms): (f64, f64)| F1Row {
        experiment: "exp1".into(),
        seed,
        setting: overlap,
        method: method.into(),
        f1,
        runtime_ms: ms,
    };
    let sgt = timed(|| {
        let table = transform_corpus(&corpus.sequences, &corpus.alphabet, &config, run.jobs)?;
        kmeans_f1(&table, &corpus.labels, spec.num_clusters, seed)
    })?;
    let bigram = timed(|| {
        let table = ngram_corpus(&corpus.sequences, &[2], corpus.alphabet.len())?;
        kmeans_f1(&table, &corpus.labels, spec.num_clusters, seed)
    })?;
    Ok(vec![row("sgt", sgt), row("2-gram", bigram)])
}

#[derive(Debug, Clone, PartialEq)]
pub struct Exp4Outcome {
    pub sequence_f1: f64,
    pub runtime_ms: f64,
    /// Alphabet labels from spectral clustering of the aggregate SGT.
    pub alphabet_clusters: Vec<usize>,
    pub alphabet_errors: usize,
}

/// Mean of the corpus SGTs, symmetrized.
pub fn aggregate_undirected(corpus: &LabeledCorpus, config: &SgtConfig, jobs: Option<usize>) -> Result<SgtMatrix> {
    let all = transform_all(&corpus.sequences, &corpus.alphabet, config, jobs)?;
    let mean = SgtMatrix::mean_of(&all)?;
    Ok(make_undirected(&mean, UndirectedMode::Approximate)?)
}

/// Three sequence clusters over two symbol groups: sequence k-means F1 and
/// spectral recovery of the symbol groups.
pub fn exp4(noise: f64, seed: u64, run: &RunConfig) -> Result<Exp4Outcome> {
    let spec = ClusterSpec::exp4((noise, noise), seed);
    let corpus = gen_bicluster_corpus(&spec, run.count)?;
    let config = SgtConfig::new(run.kappa)?.with_normalization(Normalization::LengthInsensitive);
    let (sequence_f1, runtime_ms) = timed(|| {
        let table = transform_corpus(&corpus.sequences, &corpus.alphabet, &config, run.jobs)?;
        kmeans_f1(&table, &corpus.labels, spec.num_clusters, seed)
    })?;
    let aggregate = aggregate_undirected(&corpus, &config, run.jobs)?;
    let groups = corpus.alphabet_labels.as_ref().expect("bicluster corpus has groups");
    let alphabet_clusters = spectral_alphabet_clusters(&aggregate, 2, seed)?;
    let alphabet_errors = misassigned(&alphabet_clusters, groups);
    Ok(Exp4Outcome { sequence_f1, runtime_ms, alphabet_clusters, alphabet_errors })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Exp3Outcome {
    pub true_nc: usize,
    pub selected_nc: usize,
    pub selected_kappa: f64,
    pub db: f64,
    pub f1: f64,
    pub runtime_ms: f64,
}

/// Long length-sensitive sequences; `n_c` and `κ` chosen by random search.
pub fn exp3(true_nc: usize, seed: u64, run: &RunConfig, search: &SearchConfig) -> Result<Exp3Outcome> {
    let corpus = gen_clustered_corpus(&ClusterSpec::exp3(true_nc, seed), run.count)?;
    let template = SgtConfig::new(1.0)?.with_normalization(Normalization::LengthSensitive);
    let search = SearchConfig { seed, jobs: run.jobs, ..search.clone() };
    let (outcome, runtime_ms) = timed(|| Ok(random_search(&corpus.sequences, &corpus.alphabet, &search, &template)?))?;
    let f1 = clustering_f1(&outcome.clustering.assignment, &corpus.labels)?;
    Ok(Exp3Outcome {
        true_nc,
        selected_nc: outcome.best_nc,
        selected_kappa: outcome.best_kappa,
        db: outcome.best_db,
        f1,
        runtime_ms,
    })
}

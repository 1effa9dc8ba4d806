use std::collections::HashSet;

use rayon::prelude::*;

use crate::alphabet::AlphabetIndex;
use crate::config::SgtConfig;
use crate::error::{Result, SgtError};
use crate::matrix::{FeatureVector, SgtMatrix};
use crate::sequence::Sequence;
use crate::transform::transform;

/// One feature row per sequence, all of the same width.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTable {
    ids: Vec<String>,
    rows: Vec<FeatureVector>,
    columns: Vec<String>,
}

impl FeatureTable {
    pub fn new(ids: Vec<String>, rows: Vec<FeatureVector>, columns: Vec<String>) -> Result<Self> {
        if ids.len() != rows.len() {
            return Err(SgtError::invalid(format!("{} ids for {} rows", ids.len(), rows.len())));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != columns.len()) {
            return Err(SgtError::invalid(format!(
                "row of width {} in a table with {} columns",
                row.len(),
                columns.len()
            )));
        }
        let mut seen = HashSet::with_capacity(ids.len());
        if let Some(dup) = ids.iter().find(|id| !seen.insert(id.as_str())) {
            return Err(SgtError::invalid(format!("duplicate row id {dup:?}")));
        }
        Ok(Self { ids, rows, columns })
    }

    /// Table with generic column names `c0, c1, ...`.
    pub fn from_rows(ids: Vec<String>, rows: Vec<FeatureVector>) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        Self::new(ids, rows, (0..width).map(|i| format!("c{i}")).collect())
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn rows(&self) -> &[FeatureVector] {
        &self.rows
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn row(&self, index: usize) -> &FeatureVector {
        &self.rows[index]
    }

    /// Subset of rows, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        Self::new(
            indices.iter().map(|&i| self.ids[i].clone()).collect(),
            indices.iter().map(|&i| self.rows[i].clone()).collect(),
            self.columns.clone(),
        )
    }
}

/// Runs `f` on a dedicated pool of `jobs` threads, or on the global pool
/// when `jobs` is `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(SgtError::invalid("jobs must be at least 1")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| SgtError::invalid(format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Feature matrices for every sequence, in input order.
pub fn transform_all(
    corpus: &[Sequence],
    alphabet: &AlphabetIndex,
    config: &SgtConfig,
    jobs: Option<usize>,
) -> Result<Vec<SgtMatrix>> {
    with_jobs(jobs, || corpus.par_iter().map(|seq| transform(seq, alphabet.len(), config)).collect())?
}

/// Vectorized features for a corpus; row `i` is `transform(corpus[i])`.
///
/// Rows come back in input order whatever the thread count.
pub fn transform_corpus(
    corpus: &[Sequence],
    alphabet: &AlphabetIndex,
    config: &SgtConfig,
    jobs: Option<usize>,
) -> Result<FeatureTable> {
    if corpus.is_empty() {
        return Err(SgtError::EmptyInput);
    }
    let rows = with_jobs(jobs, || {
        corpus
            .par_iter()
            .map(|seq| transform(seq, alphabet.len(), config).map(|m| m.vectorize()))
            .collect::<Result<Vec<_>>>()
    })??;
    FeatureTable::new(corpus.iter().map(|s| s.id().to_owned()).collect(), rows, alphabet.pair_names())
}

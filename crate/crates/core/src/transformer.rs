//! Fit-then-transform facade over token lists, for host-language bindings
//! that exchange plain strings and dense arrays.

use crate::alphabet::AlphabetIndex;
use crate::config::SgtConfig;
use crate::corpus::transform_corpus;
use crate::error::{Result, SgtError};
use crate::sequence::Sequence;

/// Row-major `rows × cols` array.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseRows {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl DenseRows {
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

/// An alphabet fixed from a training corpus plus a transform configuration.
/// Immutable once built, so it can be shared across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct SgtTransformer {
    config: SgtConfig,
    alphabet: AlphabetIndex,
}

impl SgtTransformer {
    /// Sorted, deduplicated union of the corpus tokens.
    pub fn fit<S, T>(corpus: &[S], config: SgtConfig) -> Result<Self>
    where
        S: AsRef<[T]>,
        T: AsRef<str>,
    {
        let alphabet = AlphabetIndex::from_corpus(corpus.iter().map(|s| s.as_ref().iter()))?;
        Ok(Self { config, alphabet })
    }

    pub fn alphabet(&self) -> &AlphabetIndex {
        &self.alphabet
    }

    pub fn config(&self) -> &SgtConfig {
        &self.config
    }

    /// One row of `|V|²` features per sequence, in `u>v` row-major order.
    pub fn transform_many<S, T>(&self, corpus: &[S], jobs: Option<usize>) -> Result<DenseRows>
    where
        S: AsRef<[T]>,
        T: AsRef<str>,
    {
        if corpus.is_empty() {
            return Err(SgtError::EmptyInput);
        }
        let seqs = corpus
            .iter()
            .enumerate()
            .map(|(i, s)| Sequence::from_tokens((i + 1).to_string(), s.as_ref(), &self.alphabet))
            .collect::<Result<Vec<_>>>()?;
        let table = transform_corpus(&seqs, &self.alphabet, &self.config, jobs)?;
        let cols = table.width();
        let data = table.rows().iter().flat_map(|r| r.iter().copied()).collect();
        Ok(DenseRows { rows: table.len(), cols, data })
    }
}

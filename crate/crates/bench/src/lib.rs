//! Synthetic benchmarks for SGT features.
//!
//! [`gen_clustered_corpus`] plants cluster-specific motifs among uniform noise,
//! and [`gen_bicluster_corpus`] additionally groups the alphabet so that
//! same-group symbols occur close together in every sequence.
//! [`ngram_features`] gives the count-based baseline and [`clustering_f1`]
//! scores a clustering against ground truth under the best one-to-one
//! matching. The [`experiments`] module wires these into repeatable runs.

mod error;
pub mod experiments;
mod generate;
mod metrics;
mod ngram;

pub use error::{BenchError, Result};
pub use generate::{gen_bicluster_corpus, gen_clustered_corpus, ClusterSpec, LabeledCorpus};
pub use metrics::{clustering_f1, hungarian_max};
pub use ngram::{ngram_corpus, ngram_features};

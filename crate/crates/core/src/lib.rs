//! Sequence Graph Transform.
//!
//! Maps a sequence over a finite alphabet `V` to a `|V|×|V|` matrix `Ψ`
//! whose entry `ψ_uv` aggregates `e^(−κ(m−l))` over every position pair
//! `l < m` with `u` at `l` and `v` at `m`, normalized by the pair count and
//! reported as a κ-th root. Small κ lets distant pairs contribute; large κ
//! keeps only close neighbours.
//!
//! ```
//! use sgt_core::{transform, AlphabetIndex, Sequence, SgtConfig};
//!
//! let alphabet = AlphabetIndex::letters(2).unwrap();
//! let seq = Sequence::from_chars("s", "ABAB", &alphabet).unwrap();
//! let sgt = transform(&seq, alphabet.len(), &SgtConfig::new(1.0).unwrap()).unwrap();
//! assert!((sgt.get(1, 0) - (-1.0f64).exp()).abs() < 1e-12);
//! ```

mod alphabet;
mod config;
mod corpus;
mod error;
pub mod io;
mod matrix;
mod sequence;
mod transform;
mod transformer;
mod undirected;

pub use alphabet::AlphabetIndex;
pub use config::{Algorithm, Directionality, Normalization, SgtConfig};
pub use corpus::{transform_all, transform_corpus, with_jobs, FeatureTable};
pub use error::{Result, SgtError};
pub use matrix::{Accumulators, FeatureVector, SgtMatrix};
pub use sequence::Sequence;
pub use transform::{
    pair_effects, pair_instances, phi, select_algorithm, transform, transform_dense, transform_positional,
    PairInstanceSet,
};
pub use transformer::{DenseRows, SgtTransformer};
pub use undirected::{make_undirected, UndirectedMode};

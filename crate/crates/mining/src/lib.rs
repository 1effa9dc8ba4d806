//! Data-mining routines over SGT feature tables.
//!
//! Everything here works in Manhattan geometry: [`kmeans`] uses per-coordinate
//! median centroids, [`davies_bouldin`] measures scatter around medians, and
//! [`nn_search`] ranks by L1 distance. [`random_search`] picks the number of
//! clusters and `κ` by alternating sweeps that minimize the DB-index.

mod dbindex;
mod distance;
mod error;
mod kmeans;
mod neighbors;
mod pca;
mod search;
mod spectral;

pub use dbindex::davies_bouldin;
pub use distance::manhattan;
pub use error::{MiningError, Result};
pub use kmeans::{kmeans, kmeans_points, ClusteringResult, KMeans};
pub use neighbors::{nn_classify, nn_search, Neighbor};
pub use pca::{pca_fit, pca_transform, PcaModel};
pub use search::{random_search, SearchConfig, SearchOutcome, SearchStep};
pub use spectral::spectral_alphabet_clusters;

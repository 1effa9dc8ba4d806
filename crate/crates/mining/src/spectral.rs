use nalgebra::{DMatrix, SymmetricEigen};
use sgt_core::SgtMatrix;

use crate::error::{invalid, Result};
use crate::kmeans::KMeans;

const RESTARTS: usize = 10;

/// Clusters the alphabet of a symmetric aggregate SGT into `k` groups.
///
/// The matrix is read as a weighted graph without self-loops. Rows of the
/// bottom-`k` eigenvectors of the symmetric normalized Laplacian are
/// normalized to unit length and grouped with k-means. Isolated alphabets
/// embed at the origin.
pub fn spectral_alphabet_clusters(sgt: &SgtMatrix, k: usize, seed: u64) -> Result<Vec<usize>> {
    let n = sgt.size();
    if k < 2 || k > n {
        return invalid(format!("k must be in 2..={n}, got {k}"));
    }
    let scale = sgt.psi().iter().copied().fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    if !sgt.is_symmetric(1e-9 * scale) {
        return invalid("spectral clustering needs a symmetric matrix; make it undirected first");
    }
    let weight = |i: usize, j: usize| if i == j { 0.0 } else { 0.5 * (sgt.get(i, j) + sgt.get(j, i)) };
    let inv_sqrt: Vec<f64> = (0..n)
        .map(|i| {
            let d: f64 = (0..n).map(|j| weight(i, j)).sum();
            if d > 0.0 {
                1.0 / d.sqrt()
            } else {
                0.0
            }
        })
        .collect();
    let laplacian = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - inv_sqrt[i] * weight(i, j) * inv_sqrt[j]
    });
    let eigen = SymmetricEigen::new(laplacian);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[a].total_cmp(&eigen.eigenvalues[b]).then(a.cmp(&b)));
    let embedding: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let row: Vec<f64> = order[..k].iter().map(|&c| eigen.eigenvectors[(i, c)]).collect();
            let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                row.into_iter().map(|x| x / norm).collect()
            } else {
                row
            }
        })
        .collect();
    Ok(KMeans::new(k).with_seed(seed).with_restarts(RESTARTS).fit(&embedding)?.assignment)
}

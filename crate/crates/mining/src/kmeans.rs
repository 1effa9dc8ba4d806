use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sgt_core::{FeatureTable, FeatureVector};

use crate::distance::{l1, median_center};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult {
    pub assignment: Vec<usize>,
    pub centroids: Vec<FeatureVector>,
    /// Sum of Manhattan distances from each row to its centroid.
    pub inertia: f64,
    pub iterations: usize,
    /// Inertia after each iteration.
    pub trace: Vec<f64>,
}

/// Manhattan k-means with median centroids and k-means++ seeding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KMeans {
    pub k: usize,
    pub max_iter: usize,
    pub seed: u64,
    /// Independent seedings; the lowest-inertia run wins.
    pub restarts: usize,
}

impl KMeans {
    pub fn new(k: usize) -> Self {
        Self { k, max_iter: 100, seed: 0, restarts: 1 }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn with_max_iter(self, max_iter: usize) -> Self {
        Self { max_iter, ..self }
    }

    pub fn with_restarts(self, restarts: usize) -> Self {
        Self { restarts, ..self }
    }

    pub fn fit<P: AsRef<[f64]> + Sync>(&self, points: &[P]) -> Result<ClusteringResult> {
        if points.is_empty() {
            return invalid("cannot cluster an empty table");
        }
        if self.k == 0 || self.k > points.len() {
            return invalid(format!("k must be in 1..={}, got {}", points.len(), self.k));
        }
        if self.max_iter == 0 || self.restarts == 0 {
            return invalid("max_iter and restarts must be at least 1");
        }
        let dim = points[0].as_ref().len();
        if points.iter().any(|p| p.as_ref().len() != dim) {
            return invalid("rows differ in length");
        }
        let mut best: Option<ClusteringResult> = None;
        for r in 0..self.restarts {
            let run = lloyd(points, self.k, self.max_iter, self.seed.wrapping_add(r as u64), dim);
            if best.as_ref().is_none_or(|b| run.inertia < b.inertia) {
                best = Some(run);
            }
        }
        Ok(best.expect("at least one restart"))
    }
}

/// Single-run k-means over a feature table.
pub fn kmeans(table: &FeatureTable, k: usize, seed: u64, max_iter: usize) -> Result<ClusteringResult> {
    KMeans::new(k).with_seed(seed).with_max_iter(max_iter).fit(table.rows())
}

/// Single-run k-means over raw points.
pub fn kmeans_points<P: AsRef<[f64]> + Sync>(points: &[P], k: usize, seed: u64) -> Result<ClusteringResult> {
    KMeans::new(k).with_seed(seed).fit(points)
}

fn seed_centroids<P: AsRef<[f64]>>(points: &[P], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = points.len();
    let mut chosen = vec![rng.random_range(0..n)];
    let mut nearest: Vec<f64> = points.iter().map(|p| l1(p.as_ref(), points[chosen[0]].as_ref())).collect();
    while chosen.len() < k {
        let weights: Vec<f64> = nearest.iter().map(|d| d * d).collect();
        let next = match WeightedIndex::new(&weights) {
            Ok(dist) => dist.sample(rng),
            // every remaining point coincides with a centroid
            Err(_) => {
                let free: Vec<usize> = (0..n).filter(|i| !chosen.contains(i)).collect();
                free[rng.random_range(0..free.len())]
            }
        };
        chosen.push(next);
        for (d, p) in nearest.iter_mut().zip(points) {
            *d = d.min(l1(p.as_ref(), points[next].as_ref()));
        }
    }
    chosen.into_iter().map(|i| points[i].as_ref().to_vec()).collect()
}

fn nearest(point: &[f64], centroids: &[Vec<f64>], current: Option<usize>) -> (usize, f64) {
    let mut best = (usize::MAX, f64::INFINITY);
    for (c, centroid) in centroids.iter().enumerate() {
        let d = l1(point, centroid);
        if d < best.1 {
            best = (c, d);
        }
    }
    // keep the current cluster on ties so inertia cannot rise
    if let Some(c) = current {
        let d = l1(point, &centroids[c]);
        if d <= best.1 {
            return (c, d);
        }
    }
    best
}

fn lloyd<P: AsRef<[f64]> + Sync>(points: &[P], k: usize, max_iter: usize, seed: u64, dim: usize) -> ClusteringResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut centroids = seed_centroids(points, k, &mut rng);
    let mut assignment: Vec<Option<usize>> = vec![None; points.len()];
    let mut trace = Vec::new();
    let mut iterations = 0;

    for _ in 0..max_iter {
        iterations += 1;
        let step: Vec<(usize, f64)> =
            points.par_iter().zip(&assignment).map(|(p, &cur)| nearest(p.as_ref(), &centroids, cur)).collect();
        let changed = step.iter().zip(&assignment).any(|(s, a)| Some(s.0) != *a);
        let mut labels: Vec<usize> = step.iter().map(|s| s.0).collect();
        let mut dists: Vec<f64> = step.iter().map(|s| s.1).collect();

        // an empty cluster takes the point farthest from its centroid
        for c in 0..k {
            if labels.iter().any(|&l| l == c) {
                continue;
            }
            let far = (0..points.len())
                .filter(|&i| labels.iter().filter(|&&l| l == labels[i]).count() > 1)
                .max_by(|&a, &b| dists[a].total_cmp(&dists[b]).then(b.cmp(&a)))
                .expect("k <= n leaves a donor cluster");
            labels[far] = c;
            dists[far] = 0.0;
            centroids[c] = points[far].as_ref().to_vec();
        }

        for (c, centroid) in centroids.iter_mut().enumerate() {
            *centroid = median_center(
                points.iter().zip(&labels).filter(|(_, &l)| l == c).map(|(p, _)| p.as_ref()),
                dim,
            );
        }
        let inertia: f64 = points.iter().zip(&labels).map(|(p, &l)| l1(p.as_ref(), &centroids[l])).sum();
        trace.push(inertia);
        assignment = labels.into_iter().map(Some).collect();
        if !changed {
            break;
        }
    }

    ClusteringResult {
        assignment: assignment.into_iter().map(|a| a.expect("assigned")).collect(),
        centroids: centroids.into_iter().map(FeatureVector::new).collect(),
        inertia: *trace.last().expect("at least one iteration"),
        iterations,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blobs(seed: u64, per: usize, centers: &[[f64; 2]], spread: f64) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        centers
            .iter()
            .flat_map(|c| {
                (0..per)
                    .map(|_| vec![c[0] + rng.random_range(-spread..spread), c[1] + rng.random_range(-spread..spread)])
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    #[test]
    fn separated_groups_recovered() {
        let pts = blobs(1, 20, &[[0.0, 0.0], [50.0, 50.0]], 1.0);
        let res = kmeans_points(&pts, 2, 3).unwrap();
        let first = res.assignment[0];
        assert!(res.assignment[..20].iter().all(|&a| a == first));
        assert!(res.assignment[20..].iter().all(|&a| a != first));
    }

    #[test]
    fn one_cluster_per_point_has_zero_inertia() {
        let pts = blobs(2, 4, &[[0.0, 0.0], [3.0, 3.0]], 2.0);
        let res = kmeans_points(&pts, pts.len(), 0).unwrap();
        assert_eq!(res.inertia, 0.0);
    }

    #[test]
    fn inertia_trace_never_rises() {
        for seed in 0..20 {
            let pts = blobs(seed, 30, &[[0.0, 0.0], [4.0, 1.0], [2.0, 5.0], [6.0, 6.0]], 3.0);
            let res = KMeans::new(5).with_seed(seed).fit(&pts).unwrap();
            for w in res.trace.windows(2) {
                assert!(w[1] <= w[0] + 1e-9, "seed {seed}: {:?}", res.trace);
            }
        }
    }

    #[test]
    fn duplicate_points_do_not_break_seeding() {
        let pts = vec![vec![1.0, 1.0]; 5];
        let res = kmeans_points(&pts, 3, 0).unwrap();
        assert_eq!(res.inertia, 0.0);
        assert_eq!(res.centroids.len(), 3);
        for c in 0..3 {
            assert!(res.assignment.contains(&c));
        }
    }

    #[test]
    fn deterministic_per_seed_and_restarts_help() {
        let pts = blobs(5, 25, &[[0.0, 0.0], [10.0, 0.0], [0.0, 10.0], [10.0, 10.0]], 4.0);
        let a = KMeans::new(4).with_seed(9).fit(&pts).unwrap();
        let b = KMeans::new(4).with_seed(9).fit(&pts).unwrap();
        assert_eq!(a, b);
        let many = KMeans::new(4).with_seed(9).with_restarts(8).fit(&pts).unwrap();
        assert!(many.inertia <= a.inertia);
    }

    #[test]
    fn rejects_bad_arguments() {
        let pts = vec![vec![0.0]; 3];
        assert!(kmeans_points(&pts, 4, 0).is_err());
        assert!(kmeans_points(&pts, 0, 0).is_err());
        assert!(kmeans_points::<Vec<f64>>(&[], 1, 0).is_err());
        assert!(KMeans::new(2).with_max_iter(0).fit(&pts).is_err());
    }
}

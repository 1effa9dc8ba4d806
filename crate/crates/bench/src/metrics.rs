use std::collections::BTreeMap;

use crate::error::{invalid, Result};

/// Assignment maximizing the total weight of a rectangular matrix.
///
/// Returns, for every row, the matched column (or `None` when there are
/// more rows than columns).
pub fn hungarian_max(weights: &[Vec<f64>]) -> Vec<Option<usize>> {
    let rows = weights.len();
    let cols = weights.first().map_or(0, Vec::len);
    let n = rows.max(cols);
    if n == 0 {
        return Vec::new();
    }
    let top = weights.iter().flatten().copied().fold(0.0, f64::max);
    let cost = |i: usize, j: usize| if i < rows && j < cols { top - weights[i][j] } else { top };

    // potentials and matching, 1-based with a sentinel column 0
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut matched = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        matched[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[matched[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if matched[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut out = vec![None; rows];
    for j in 1..=n {
        let i = matched[j];
        if i >= 1 && i <= rows && j <= cols {
            out[i - 1] = Some(j - 1);
        }
    }
    out
}

/// Macro-averaged F1 over ground-truth classes after matching clusters to
/// classes one-to-one so the total F1 is maximal. Classes left unmatched
/// score 0.
pub fn clustering_f1(predicted: &[usize], truth: &[usize]) -> Result<f64> {
    if predicted.len() != truth.len() {
        return invalid(format!("{} predictions for {} labels", predicted.len(), truth.len()));
    }
    if truth.is_empty() {
        return invalid("no labels");
    }
    let index = |labels: &[usize]| -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &l in labels {
            let next = m.len();
            m.entry(l).or_insert(next);
        }
        m
    };
    let (classes, clusters) = (index(truth), index(predicted));
    let mut table = vec![vec![0usize; clusters.len()]; classes.len()];
    let mut class_size = vec![0usize; classes.len()];
    let mut cluster_size = vec![0usize; clusters.len()];
    for (p, t) in predicted.iter().zip(truth) {
        let (i, j) = (classes[t], clusters[p]);
        table[i][j] += 1;
        class_size[i] += 1;
        cluster_size[j] += 1;
    }
    let f1: Vec<Vec<f64>> = table
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &n)| 2.0 * n as f64 / (class_size[i] + cluster_size[j]) as f64)
                .collect()
        })
        .collect();
    let matching = hungarian_max(&f1);
    let total: f64 = matching.iter().enumerate().filter_map(|(i, m)| m.map(|j| f1[i][j])).sum();
    Ok(total / classes.len() as f64)
}

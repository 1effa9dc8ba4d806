use std::collections::BTreeMap;

use sgt_core::FeatureTable;

use crate::distance::{l1, median_center};
use crate::error::{invalid, Result};

/// Davies-Bouldin index with median centers and Manhattan distances.
///
/// Scatter is the mean distance of members to their cluster median. Lower
/// is better. Two clusters with coincident centers give infinity.
pub fn davies_bouldin(table: &FeatureTable, assignment: &[usize]) -> Result<f64> {
    davies_bouldin_points(table.rows(), assignment)
}

pub(crate) fn davies_bouldin_points<P: AsRef<[f64]>>(points: &[P], assignment: &[usize]) -> Result<f64> {
    if points.len() != assignment.len() {
        return invalid(format!("{} rows but {} labels", points.len(), assignment.len()));
    }
    let mut members: BTreeMap<usize, Vec<&[f64]>> = BTreeMap::new();
    for (p, &label) in points.iter().zip(assignment) {
        members.entry(label).or_default().push(p.as_ref());
    }
    if members.len() < 2 {
        return invalid("need at least two non-empty clusters");
    }
    let dim = points[0].as_ref().len();
    let (centers, scatter): (Vec<Vec<f64>>, Vec<f64>) = members
        .values()
        .map(|rows| {
            let center = median_center(rows.iter().copied(), dim);
            let s = rows.iter().map(|r| l1(r, &center)).sum::<f64>() / rows.len() as f64;
            (center, s)
        })
        .unzip();

    let k = centers.len();
    let total: f64 = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i)
                .map(|j| {
                    let sep = l1(&centers[i], &centers[j]);
                    if sep == 0.0 {
                        f64::INFINITY
                    } else {
                        (scatter[i] + scatter[j]) / sep
                    }
                })
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .sum();
    Ok(total / k as f64)
}

use nalgebra::DMatrix;
use sgt_core::{FeatureTable, FeatureVector};

use crate::error::{invalid, Result};

/// Principal axes of a mean-centred feature table.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaModel {
    pub mean: Vec<f64>,
    /// One row per component, each of unit length.
    pub components: Vec<Vec<f64>>,
    pub singular_values: Vec<f64>,
    /// Share of total variance carried by each kept component.
    pub explained_variance_ratio: Vec<f64>,
}

impl PcaModel {
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn project(&self, row: &[f64]) -> Result<FeatureVector> {
        if row.len() != self.mean.len() {
            return invalid(format!("row has {} values, model expects {}", row.len(), self.mean.len()));
        }
        let centred: Vec<f64> = row.iter().zip(&self.mean).map(|(x, m)| x - m).collect();
        Ok(FeatureVector::new(
            self.components.iter().map(|c| c.iter().zip(&centred).map(|(a, b)| a * b).sum()).collect(),
        ))
    }

    pub fn reconstruct(&self, scores: &[f64]) -> Result<Vec<f64>> {
        if scores.len() != self.n_components() {
            return invalid(format!("{} scores for {} components", scores.len(), self.n_components()));
        }
        let mut out = self.mean.clone();
        for (s, c) in scores.iter().zip(&self.components) {
            for (o, v) in out.iter_mut().zip(c) {
                *o += s * v;
            }
        }
        Ok(out)
    }
}

/// Fits the top `components` principal axes.
///
/// Each axis is signed so that its largest-magnitude coordinate is positive.
pub fn pca_fit(table: &FeatureTable, components: usize) -> Result<PcaModel> {
    let (n, d) = (table.len(), table.width());
    if components == 0 || components > n.min(d) {
        return invalid(format!("components must be in 1..={}, got {components}", n.min(d)));
    }
    let mean: Vec<f64> = (0..d).map(|j| table.rows().iter().map(|r| r[j]).sum::<f64>() / n as f64).collect();
    let centred = DMatrix::from_fn(n, d, |i, j| table.row(i)[j] - mean[j]);
    let svd = centred.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");

    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]).then(a.cmp(&b)));
    let total: f64 = svd.singular_values.iter().map(|s| s * s).sum();

    let mut axes = Vec::with_capacity(components);
    let mut singular_values = Vec::with_capacity(components);
    let mut ratios = Vec::with_capacity(components);
    for &idx in order.iter().take(components) {
        let mut axis: Vec<f64> = v_t.row(idx).iter().copied().collect();
        let pivot = axis
            .iter()
            .copied()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()).then(b.0.cmp(&a.0)))
            .map(|(_, v)| v)
            .unwrap_or(0.0);
        if pivot < 0.0 {
            axis.iter_mut().for_each(|v| *v = -*v);
        }
        let s = svd.singular_values[idx];
        axes.push(axis);
        singular_values.push(s);
        ratios.push(if total > 0.0 { s * s / total } else { 0.0 });
    }
    Ok(PcaModel { mean, components: axes, singular_values, explained_variance_ratio: ratios })
}

/// Projects every row of `table`; columns are named `pc1..pcK`.
pub fn pca_transform(model: &PcaModel, table: &FeatureTable) -> Result<FeatureTable> {
    let rows = table.rows().iter().map(|r| model.project(r)).collect::<Result<Vec<_>>>()?;
    let columns = (1..=model.n_components()).map(|i| format!("pc{i}")).collect();
    Ok(FeatureTable::new(table.ids().to_vec(), rows, columns)?)
}

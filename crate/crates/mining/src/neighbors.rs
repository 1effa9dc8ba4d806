use std::collections::BTreeMap;

use sgt_core::FeatureTable;

use crate::distance::l1;
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Neighbor {
    pub id: String,
    pub index: usize,
    pub distance: f64,
}

fn ranked(query: &[f64], table: &FeatureTable) -> Result<Vec<Neighbor>> {
    if table.is_empty() {
        return invalid("table is empty");
    }
    if query.len() != table.width() {
        return invalid(format!("query has {} values, table has {} columns", query.len(), table.width()));
    }
    let mut all: Vec<Neighbor> = table
        .rows()
        .iter()
        .zip(table.ids())
        .enumerate()
        .map(|(index, (row, id))| Neighbor { id: id.clone(), index, distance: l1(query, row) })
        .collect();
    all.sort_by(|a, b| a.distance.total_cmp(&b.distance).then_with(|| a.id.cmp(&b.id)));
    Ok(all)
}

/// Exact top-`k` rows by Manhattan distance; ties go to the smaller id.
pub fn nn_search(query: &[f64], table: &FeatureTable, top_k: usize) -> Result<Vec<Neighbor>> {
    if top_k == 0 {
        return invalid("top_k must be at least 1");
    }
    let mut all = ranked(query, table)?;
    all.truncate(top_k);
    Ok(all)
}

/// Majority label among the `k` nearest rows.
///
/// Ties go to the label with the smaller mean distance, then the smaller
/// label.
pub fn nn_classify<L: Ord + Clone>(query: &[f64], table: &FeatureTable, labels: &[L], k: usize) -> Result<L> {
    if labels.len() != table.len() {
        return invalid(format!("{} labels for {} rows", labels.len(), table.len()));
    }
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let neighbors = nn_search(query, table, k)?;
    let mut votes: BTreeMap<&L, (usize, f64)> = BTreeMap::new();
    for n in &neighbors {
        let entry = votes.entry(&labels[n.index]).or_default();
        entry.0 += 1;
        entry.1 += n.distance;
    }
    let winner = votes
        .into_iter()
        .min_by(|(la, (ca, da)), (lb, (cb, db))| {
            cb.cmp(ca)
                .then_with(|| (da / *ca as f64).total_cmp(&(db / *cb as f64)))
                .then_with(|| la.cmp(lb))
        })
        .map(|(label, _)| label.clone())
        .expect("at least one neighbour");
    Ok(winner)
}

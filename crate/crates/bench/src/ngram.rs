use sgt_core::{FeatureTable, FeatureVector, Sequence};

use crate::error::{invalid, Result};

/// Concatenated n-gram counts, one block of `|V|^n` per order.
///
/// Within a block, grams are ordered lexicographically by alphabet index.
/// Orders longer than the sequence give an all-zero block.
pub fn ngram_features(seq: &Sequence, orders: &[usize], alphabet_size: usize) -> Result<FeatureVector> {
    if orders.is_empty() || orders.contains(&0) {
        return invalid("orders must be non-empty and at least 1");
    }
    if alphabet_size == 0 {
        return invalid("alphabet is empty");
    }
    let mut out = Vec::new();
    for &n in orders {
        let width = u32::try_from(n)
            .ok()
            .and_then(|e| alphabet_size.checked_pow(e))
            .filter(|w| *w <= 1 << 26)
            .ok_or_else(|| crate::BenchError::InvalidArgument(format!("{alphabet_size}^{n} columns is too many")))?;
        let mut block = vec![0.0; width];
        for window in seq.events().windows(n) {
            let index = window.iter().fold(0usize, |acc, &e| acc * alphabet_size + e);
            block[index] += 1.0;
        }
        out.extend(block);
    }
    Ok(FeatureVector::new(out))
}

/// [`ngram_features`] for every sequence. Columns are `g<order>_<index>`.
pub fn ngram_corpus(corpus: &[Sequence], orders: &[usize], alphabet_size: usize) -> Result<FeatureTable> {
    let rows = corpus.iter().map(|s| ngram_features(s, orders, alphabet_size)).collect::<Result<Vec<_>>>()?;
    let columns = orders
        .iter()
        .flat_map(|&n| (0..alphabet_size.pow(n as u32)).map(move |i| format!("g{n}_{i}")))
        .collect();
    Ok(FeatureTable::new(corpus.iter().map(|s| s.id().to_owned()).collect(), rows, columns)?)
}

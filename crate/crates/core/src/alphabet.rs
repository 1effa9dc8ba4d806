use std::collections::{BTreeSet, HashMap};

use crate::error::{Result, SgtError};

/// Ordered bijection between alphabet tokens and dense ids `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetIndex {
    tokens: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl AlphabetIndex {
    /// Builds an index that keeps the given token order.
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(SgtError::invalid("alphabet must contain at least one token"));
        }
        let mut lookup = HashMap::with_capacity(tokens.len());
        for (id, token) in tokens.iter().enumerate() {
            if lookup.insert(token.clone(), id).is_some() {
                return Err(SgtError::invalid(format!("duplicate alphabet token {token:?}")));
            }
        }
        Ok(Self { tokens, lookup })
    }

    /// Sorted union of all tokens observed in `corpus`.
    pub fn from_corpus<C, S, T>(corpus: C) -> Result<Self>
    where
        C: IntoIterator<Item = S>,
        S: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let mut seen = BTreeSet::new();
        for seq in corpus {
            for token in seq {
                let token = token.as_ref();
                if !seen.contains(token) {
                    seen.insert(token.to_owned());
                }
            }
        }
        if seen.is_empty() {
            return Err(SgtError::EmptyInput);
        }
        Self::new(seen)
    }

    /// Alphabet of single-letter tokens `A`, `B`, ... of the given size (≤ 26).
    pub fn letters(size: usize) -> Result<Self> {
        if size == 0 || size > 26 {
            return Err(SgtError::invalid(format!("letter alphabet size {size} outside 1..=26")));
        }
        Self::new((0..size).map(|i| char::from(b'A' + i as u8).to_string()))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn id(&self, token: &str) -> Option<usize> {
        self.lookup.get(token).copied()
    }

    pub fn token(&self, id: usize) -> Option<&str> {
        self.tokens.get(id).map(String::as_str)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// Column names `u>v` in row-major pair order.
    pub fn pair_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.len() * self.len());
        for u in &self.tokens {
            for v in &self.tokens {
                names.push(format!("{u}>{v}"));
            }
        }
        names
    }
}

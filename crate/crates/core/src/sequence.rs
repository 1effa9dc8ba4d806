use crate::alphabet::AlphabetIndex;
use crate::error::{Result, SgtError};

/// An ordered, non-empty list of events, each an id into an [`AlphabetIndex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    id: String,
    events: Vec<usize>,
}

impl Sequence {
    /// Builds a sequence from alphabet ids, checking each against `alphabet`.
    pub fn new(id: impl Into<String>, events: Vec<usize>, alphabet: &AlphabetIndex) -> Result<Self> {
        let id = id.into();
        if events.is_empty() {
            return Err(SgtError::invalid(format!("sequence {id:?} is empty")));
        }
        if let Some(&bad) = events.iter().find(|&&e| e >= alphabet.len()) {
            return Err(SgtError::invalid(format!(
                "sequence {id:?}: event id {bad} out of range for alphabet of size {}",
                alphabet.len()
            )));
        }
        Ok(Self { id, events })
    }

    /// Maps tokens through `alphabet`; the first unknown token is reported
    /// together with the sequence id.
    pub fn from_tokens<I, T>(id: impl Into<String>, tokens: I, alphabet: &AlphabetIndex) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let id = id.into();
        let mut events = Vec::new();
        for token in tokens {
            let token = token.as_ref();
            match alphabet.id(token) {
                Some(e) => events.push(e),
                None => {
                    return Err(SgtError::UnknownToken { id, token: token.to_owned() });
                }
            }
        }
        Self::new(id, events, alphabet)
    }

    /// Each character of `text` is one event.
    pub fn from_chars(id: impl Into<String>, text: &str, alphabet: &AlphabetIndex) -> Result<Self> {
        let mut buf = [0u8; 4];
        Self::from_tokens(id, text.chars().map(|c| c.encode_utf8(&mut buf).to_owned()), alphabet)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn events(&self) -> &[usize] {
        &self.events
    }

    /// Sequence length `L`.
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// 0-based positions of every alphabet id, indexed by id.
    pub fn alphabet_positions(&self, alphabet_size: usize) -> Vec<Vec<usize>> {
        let mut positions = vec![Vec::new(); alphabet_size];
        for (pos, &e) in self.events.iter().enumerate() {
            positions[e].push(pos);
        }
        positions
    }

    pub fn tokens<'a>(&'a self, alphabet: &'a AlphabetIndex) -> impl Iterator<Item = &'a str> + 'a {
        self.events.iter().map(move |&e| alphabet.token(e).unwrap_or("?"))
    }
}

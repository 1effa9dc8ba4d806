use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::alphabet::AlphabetIndex;
use crate::error::{Result, SgtError};
use crate::sequence::Sequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusFormat {
    /// One sequence per line, one event per character.
    CharLine,
    /// One sequence per line, events separated by `delimiter`.
    TokenLine { delimiter: String },
    /// `>` header lines start records; residues are events.
    Fasta,
}

impl CorpusFormat {
    pub fn token_line(delimiter: impl Into<String>) -> Self {
        CorpusFormat::TokenLine { delimiter: delimiter.into() }
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub sequences: Vec<Sequence>,
    pub alphabet: AlphabetIndex,
}

struct RawRecord {
    id: String,
    tokens: Vec<String>,
}

/// Reads a corpus. Without an explicit alphabet the index is the sorted
/// union of observed tokens; with one, tokens outside it are rejected.
pub fn read_corpus<R: Read>(input: R, format: &CorpusFormat, alphabet: Option<&AlphabetIndex>) -> Result<Corpus> {
    let records = match format {
        CorpusFormat::CharLine => read_lines(input, |line| line.chars().map(String::from).collect())?,
        CorpusFormat::TokenLine { delimiter } => {
            if delimiter.is_empty() {
                return Err(SgtError::invalid("token delimiter must not be empty"));
            }
            read_lines(input, |line| {
                line.split(delimiter.as_str())
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(String::from)
                    .collect()
            })?
        }
        CorpusFormat::Fasta => read_fasta(input)?,
    };
    if records.is_empty() {
        return Err(SgtError::EmptyInput);
    }
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => AlphabetIndex::from_corpus(records.iter().map(|r| r.tokens.iter()))?,
    };
    let sequences = records
        .into_iter()
        .map(|r| Sequence::from_tokens(r.id, r.tokens, &alphabet))
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus { sequences, alphabet })
}

pub fn read_corpus_file(path: &Path, format: &CorpusFormat, alphabet: Option<&AlphabetIndex>) -> Result<Corpus> {
    read_corpus(File::open(path)?, format, alphabet)
}

/// Alphabet file: one token per non-empty line, order preserved.
pub fn read_alphabet<R: Read>(input: R) -> Result<AlphabetIndex> {
    let mut tokens = Vec::new();
    for line in BufReader::new(input).lines() {
        let line = line?;
        let token = line.trim();
        if !token.is_empty() {
            tokens.push(token.to_owned());
        }
    }
    if tokens.is_empty() {
        return Err(SgtError::Malformed("alphabet file lists no tokens".into()));
    }
    AlphabetIndex::new(tokens).map_err(|e| SgtError::Malformed(e.to_string()))
}

fn read_lines<R: Read>(input: R, split: impl Fn(&str) -> Vec<String>) -> Result<Vec<RawRecord>> {
    let mut records = Vec::new();
    for (n, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() {
            continue;
        }
        let tokens = split(line);
        if tokens.is_empty() {
            continue;
        }
        records.push(RawRecord { id: (n + 1).to_string(), tokens });
    }
    Ok(records)
}

fn read_fasta<R: Read>(input: R) -> Result<Vec<RawRecord>> {
    let mut records: Vec<RawRecord> = Vec::new();
    for (n, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            records.push(RawRecord { id: header.trim().to_owned(), tokens: Vec::new() });
            continue;
        }
        let record = records
            .last_mut()
            .ok_or_else(|| SgtError::Malformed(format!("line {}: residues before the first '>' header", n + 1)))?;
        for c in line.chars().filter(|c| !c.is_whitespace()) {
            if !c.is_ascii_alphabetic() {
                return Err(SgtError::Malformed(format!(
                    "line {}: record {:?} contains non-residue character {c:?}",
                    n + 1,
                    record.id
                )));
            }
            record.tokens.push(c.to_ascii_uppercase().to_string());
        }
    }
    if let Some(empty) = records.iter().find(|r| r.tokens.is_empty()) {
        return Err(SgtError::Malformed(format!("record {:?} has no residues", empty.id)));
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_lines() {
        let corpus = read_corpus("ABAB\n\nBA\n".as_bytes(), &CorpusFormat::CharLine, None).unwrap();
        assert_eq!(corpus.sequences.len(), 2);
        assert_eq!(corpus.alphabet.tokens(), ["A", "B"]);
        assert_eq!(corpus.sequences[0].id(), "1");
        assert_eq!(corpus.sequences[1].id(), "3");
        assert_eq!(corpus.sequences[1].events(), &[1, 0]);
    }

    #[test]
    fn fasta_concatenates_and_uppercases() {
        let corpus = read_corpus(">x\nMSY\nqqq\n".as_bytes(), &CorpusFormat::Fasta, None).unwrap();
        assert_eq!(corpus.sequences.len(), 1);
        assert_eq!(corpus.sequences[0].id(), "x");
        let text: String = corpus.sequences[0].tokens(&corpus.alphabet).collect();
        assert_eq!(text, "MSYQQQ");
        assert_eq!(corpus.sequences[0].len(), 6);
    }

    #[test]
    fn fasta_errors() {
        assert!(matches!(
            read_corpus("MSY\n".as_bytes(), &CorpusFormat::Fasta, None),
            Err(SgtError::Malformed(_))
        ));
        assert!(matches!(
            read_corpus(">x\nMS1\n".as_bytes(), &CorpusFormat::Fasta, None),
            Err(SgtError::Malformed(_))
        ));
        assert!(matches!(
            read_corpus(">x\n>y\nAA\n".as_bytes(), &CorpusFormat::Fasta, None),
            Err(SgtError::Malformed(_))
        ));
    }

    #[test]
    fn token_lines() {
        let corpus =
            read_corpus("frontpage,news,frontpage\n".as_bytes(), &CorpusFormat::token_line(","), None).unwrap();
        assert_eq!(corpus.sequences[0].len(), 3);
        assert_eq!(corpus.alphabet.tokens(), ["frontpage", "news"]);
    }

    #[test]
    fn empty_input_and_explicit_alphabet() {
        assert!(matches!(
            read_corpus("\n\n".as_bytes(), &CorpusFormat::CharLine, None),
            Err(SgtError::EmptyInput)
        ));
        let alphabet = read_alphabet("A\nB\n".as_bytes()).unwrap();
        let err = read_corpus("AB\nABC\n".as_bytes(), &CorpusFormat::CharLine, Some(&alphabet)).unwrap_err();
        match err {
            SgtError::UnknownToken { id, token } => assert_eq!((id.as_str(), token.as_str()), ("2", "C")),
            other => panic!("unexpected {other}"),
        }
        let ok = read_corpus("BA\n".as_bytes(), &CorpusFormat::CharLine, Some(&alphabet)).unwrap();
        assert_eq!(ok.alphabet.len(), 2);
    }
}

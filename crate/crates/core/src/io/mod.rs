//! Corpus readers, feature/label CSV files and DOT export.

mod csv;
mod dot;
mod reader;

pub use self::csv::{format_value, read_features_csv, read_labels_csv, write_features_csv, write_labels_csv};
pub use self::dot::{write_dot, DotOptions};
pub use self::reader::{read_alphabet, read_corpus, read_corpus_file, Corpus, CorpusFormat};

use std::io::{Read, Write};

use crate::corpus::FeatureTable;
use crate::error::{Result, SgtError};
use crate::matrix::FeatureVector;

const SIGNIFICANT_DIGITS: usize = 12;

/// Shortest `%g`-style rendering of `x` with 12 significant digits.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_owned()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

/// Header `id,<col>...`, then one row per table row in table order.
pub fn write_features_csv<W: Write>(table: &FeatureTable, dest: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(dest);
    out.write_record(std::iter::once("id").chain(table.columns().iter().map(String::as_str)))?;
    let mut record = Vec::with_capacity(table.width() + 1);
    for (id, row) in table.ids().iter().zip(table.rows()) {
        record.clear();
        record.push(id.clone());
        record.extend(row.iter().map(|&x| format_value(x)));
        out.write_record(&record)?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_features_csv<R: Read>(input: R) -> Result<FeatureTable> {
    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.get(0) != Some("id") {
        return Err(SgtError::Malformed("features CSV must start with an `id` column".into()));
    }
    let columns: Vec<String> = headers.iter().skip(1).map(String::from).collect();
    let mut ids = Vec::new();
    let mut rows = Vec::new();
    for (n, record) in reader.records().enumerate() {
        let record = record?;
        ids.push(record[0].to_owned());
        let values = record
            .iter()
            .skip(1)
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| SgtError::Malformed(format!("row {}: {v:?} is not a number", n + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(FeatureVector::new(values));
    }
    if rows.is_empty() {
        return Err(SgtError::EmptyInput);
    }
    FeatureTable::new(ids, rows, columns).map_err(|e| SgtError::Malformed(e.to_string()))
}

/// `id,label` rows.
pub fn write_labels_csv<W: Write, L: ToString>(ids: &[String], labels: &[L], dest: W) -> Result<()> {
    if ids.len() != labels.len() {
        return Err(SgtError::invalid(format!("{} ids for {} labels", ids.len(), labels.len())));
    }
    let mut out = csv::Writer::from_writer(dest);
    out.write_record(["id", "label"])?;
    for (id, label) in ids.iter().zip(labels) {
        out.write_record([id.as_str(), label.to_string().as_str()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_labels_csv<R: Read>(input: R) -> Result<Vec<(String, String)>> {
    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.len() < 2 || headers.get(0) != Some("id") {
        return Err(SgtError::Malformed("labels CSV must have `id,label` columns".into()));
    }
    let mut pairs = Vec::new();
    for record in reader.records() {
        let record = record?;
        pairs.push((record[0].to_owned(), record[1].to_owned()));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{transform_corpus, AlphabetIndex, Sequence, SgtConfig};
    use proptest::prelude::*;

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.5), "0.5");
        assert_eq!(format_value(0.065_934_852_f64), "0.065934852");
        assert_eq!(format_value(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_value(123_456.789), "123456.789");
        assert_eq!(format_value(1.5e-7), "1.5e-7");
        assert_eq!(format_value(2.0e15), "2e15");
    }

    proptest! {
        #[test]
        fn formatted_values_round_trip(x in 0.0f64..1000.0) {
            let back: f64 = format_value(x).parse().unwrap();
            prop_assert!((back - x).abs() <= 1e-10 * x.max(1.0));
        }
    }

    #[test]
    fn table_round_trip_and_shape() {
        let alphabet = AlphabetIndex::letters(2).unwrap();
        let seqs = vec![Sequence::from_chars("only", "ABBA", &alphabet).unwrap()];
        let table = transform_corpus(&seqs, &alphabet, &SgtConfig::new(1.0).unwrap(), Some(1)).unwrap();
        let mut buf = Vec::new();
        write_features_csv(&table, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(header, "id,A>A,A>B,B>A,B>B");
        assert_eq!(header.split(',').count(), 5);
        let back = read_features_csv(buf.as_slice()).unwrap();
        assert_eq!(back.ids(), table.ids());
        for (a, b) in back.row(0).iter().zip(table.row(0).iter()) {
            assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn ids_with_commas_are_quoted() {
        let table =
            FeatureTable::new(vec!["a,b".into()], vec![vec![1.0].into()], vec!["A>A".into()]).unwrap();
        let mut buf = Vec::new();
        write_features_csv(&table, &mut buf).unwrap();
        let back = read_features_csv(buf.as_slice()).unwrap();
        assert_eq!(back.ids()[0], "a,b");
    }

    #[test]
    fn labels_round_trip() {
        let ids = vec!["x".to_string(), "y".to_string()];
        let mut buf = Vec::new();
        write_labels_csv(&ids, &[3usize, 1], &mut buf).unwrap();
        let back = read_labels_csv(buf.as_slice()).unwrap();
        assert_eq!(back, vec![("x".into(), "3".into()), ("y".into(), "1".into())]);
        assert!(write_labels_csv(&ids, &[1usize], Vec::new()).is_err());
    }

    #[test]
    fn malformed_features() {
        assert!(read_features_csv("name,a\nx,1\n".as_bytes()).is_err());
        assert!(read_features_csv("id,a\nx,abc\n".as_bytes()).is_err());
        assert!(matches!(read_features_csv("id,a\n".as_bytes()), Err(SgtError::EmptyInput)));
    }
}

//! Transaction files and synthetic databases.
//!
//! The file format is one transaction per line. Items are separated by
//! commas or whitespace. Blank lines and lines starting with `#` are skipped.

use std::io::{Read, Write};

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::model::{Item, TransactionDatabase};

pub const COMMENT_PREFIX: char = '#';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Separator {
    Comma,
    Whitespace,
    /// Comma if the first data line contains one, whitespace otherwise.
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct InputFormat {
    pub separator: Separator,
}

impl InputFormat {
    pub fn new(separator: Separator) -> Self {
        InputFormat { separator }
    }
}

pub fn parse_transactions(
    mut input: impl Read,
    format: InputFormat,
) -> Result<TransactionDatabase> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Error::Encoding {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
    })?;
    parse_str(text, format)
}

pub fn parse_str(text: &str, format: InputFormat) -> Result<TransactionDatabase> {
    let data_lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with(COMMENT_PREFIX));

    let mut separator = format.separator;
    let mut rows: Vec<Vec<&str>> = Vec::new();
    for (number, line) in data_lines {
        if separator == Separator::Auto {
            separator = if line.contains(',') {
                Separator::Comma
            } else {
                Separator::Whitespace
            };
        }
        let tokens: Vec<&str> = match separator {
            Separator::Comma => line.split(',').map(str::trim).collect(),
            _ => line.split_whitespace().collect(),
        };
        for token in &tokens {
            if token.is_empty() {
                return Err(Error::Parse {
                    line: number,
                    message: "empty item between separators".into(),
                });
            }
            Item::new(*token).map_err(|e| Error::Parse {
                line: number,
                message: e.to_string(),
            })?;
        }
        rows.push(tokens);
    }
    TransactionDatabase::from_rows(rows)
}

/// Writes one line per transaction, items in canonical order.
pub fn write_transactions(
    db: &TransactionDatabase,
    mut out: impl Write,
    separator: Separator,
) -> Result<()> {
    let joiner = match separator {
        Separator::Whitespace => " ",
        _ => ",",
    };
    for row in db.token_rows() {
        writeln!(out, "{}", row.join(joiner))?;
    }
    Ok(())
}

/// Parameters for a reproducible random database.
///
/// Transaction sizes are drawn from a normal distribution centred on
/// `mean_size` with standard deviation `sqrt(mean_size)`, rounded and clamped
/// to `1..=items`. Items are chosen uniformly without replacement. Item
/// tokens are `i` followed by a zero-padded index, so token order matches
/// index order. The universe always holds all `items` tokens.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub items: usize,
    pub transactions: usize,
    pub mean_size: f64,
    pub seed: u64,
}

pub fn generate_synthetic(spec: &GeneratorSpec) -> Result<TransactionDatabase> {
    if spec.items == 0 {
        return Err(Error::Spec("item count must be at least 1".into()));
    }
    if !spec.mean_size.is_finite() || spec.mean_size < 0.0 {
        return Err(Error::Spec(format!(
            "mean size {} is not a valid size",
            spec.mean_size
        )));
    }
    if spec.mean_size > spec.items as f64 {
        return Err(Error::Spec(format!(
            "mean size {} exceeds item count {}",
            spec.mean_size, spec.items
        )));
    }
    let width = spec.items.to_string().len();
    let tokens: Vec<String> = (1..=spec.items).map(|i| format!("i{i:0width$}")).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let sizes = Normal::new(spec.mean_size, spec.mean_size.sqrt())
        .map_err(|e| Error::Spec(e.to_string()))?;
    let rows: Vec<Vec<&str>> = (0..spec.transactions)
        .map(|_| {
            let size = sizes.sample(&mut rng).round().clamp(1.0, spec.items as f64) as usize;
            index::sample(&mut rng, spec.items, size)
                .into_iter()
                .map(|i| tokens[i].as_str())
                .collect()
        })
        .collect();
    TransactionDatabase::with_universe(rows, &tokens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::sample_db;
    use proptest::prelude::*;

    #[test]
    fn parses_sample_database() {
        let db = parse_str("A,C,D\nB,C,E\nA,B,C,E\nB,E", InputFormat::default()).unwrap();
        assert_eq!(db, sample_db());
        let ids: Vec<u64> = db.transactions().iter().map(|t| t.id).collect();
        assert_eq!(ids, [1, 2, 3, 4]);
    }

    #[test]
    fn trims_and_deduplicates() {
        let db = parse_str("A, A ,B", InputFormat::default()).unwrap();
        assert_eq!(db.token_rows(), [["A", "B"]]);
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let db = parse_str("# header\n\nA B", InputFormat::new(Separator::Whitespace)).unwrap();
        assert_eq!(db.token_rows(), [["A", "B"]]);
    }

    #[test]
    fn auto_separator_follows_first_data_line() {
        let db = parse_str("# a,b\nx y\nz w", InputFormat::default()).unwrap();
        assert_eq!(db.len(), 2);
        // Comma mode keeps whitespace inside a field, which is not a valid item.
        let err = parse_str("a,b\nx y", InputFormat::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn empty_token_reports_line() {
        let err = parse_str("A,B\n\nA,,B", InputFormat::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        assert!(parse_str("A,B,", InputFormat::default()).is_err());
    }

    #[test]
    fn rejects_bad_utf8() {
        let err = parse_transactions(&b"A,B\nC,\xff\n"[..], InputFormat::default()).unwrap_err();
        assert_eq!(err, Error::Encoding { line: 2 });
    }

    #[test]
    fn empty_input_gives_empty_database() {
        let db = parse_str("# nothing\n", InputFormat::default()).unwrap();
        assert!(db.is_empty());
        assert_eq!(db.universe_size(), 0);
    }

    #[test]
    fn generator_empty_database_keeps_universe() {
        let spec = GeneratorSpec {
            items: 5,
            transactions: 0,
            mean_size: 2.0,
            seed: 1,
        };
        let db = generate_synthetic(&spec).unwrap();
        assert!(db.is_empty());
        assert_eq!(db.universe_size(), 5);
    }

    #[test]
    fn generator_is_deterministic() {
        let spec = GeneratorSpec {
            items: 10,
            transactions: 30,
            mean_size: 4.0,
            seed: 42,
        };
        let a = generate_synthetic(&spec).unwrap();
        assert_eq!(a, generate_synthetic(&spec).unwrap());
        assert_eq!(a.len(), 30);
        assert!(a
            .transactions()
            .iter()
            .all(|t| (1..=10).contains(&t.items.len())));
        let other = generate_synthetic(&GeneratorSpec { seed: 43, ..spec }).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn generator_rejects_oversized_mean() {
        let spec = GeneratorSpec {
            items: 3,
            transactions: 5,
            mean_size: 3.5,
            seed: 0,
        };
        assert!(matches!(generate_synthetic(&spec), Err(Error::Spec(_))));
        let spec = GeneratorSpec {
            items: 0,
            transactions: 5,
            mean_size: 0.0,
            seed: 0,
        };
        assert!(matches!(generate_synthetic(&spec), Err(Error::Spec(_))));
    }

    fn rows() -> impl Strategy<Value = Vec<Vec<String>>> {
        let token = prop::sample::select(vec!["A", "B", "C", "milk", "bread", "x1", "x10", "x2"]);
        prop::collection::vec(
            prop::collection::vec(token.prop_map(String::from), 1..6),
            0..10,
        )
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(rows in rows()) {
            let db = TransactionDatabase::from_rows(rows).unwrap();
            for sep in [Separator::Comma, Separator::Whitespace] {
                let mut buf = Vec::new();
                write_transactions(&db, &mut buf, sep).unwrap();
                let back = parse_transactions(&buf[..], InputFormat::new(sep)).unwrap();
                prop_assert_eq!(&back, &db);
            }
        }
    }
}

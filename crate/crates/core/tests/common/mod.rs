#![allow(dead_code)]

use fpm_core::{generate_synthetic, GeneratorSpec, TransactionDatabase};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BUCKET_CHOICES: [usize; 4] = [1, 3, 7, 64];

pub fn sample_db() -> TransactionDatabase {
    TransactionDatabase::from_rows([
        vec!["A", "C", "D"],
        vec!["B", "C", "E"],
        vec!["A", "B", "C", "E"],
        vec!["B", "E"],
    ])
    .unwrap()
}

pub const SAMPLE_FILE: &str = "A,C,D\nB,C,E\nA,B,C,E\nB,E\n";

/// One random database of the equivalence corpus.
pub struct CorpusCase {
    pub seed: u64,
    pub db: TransactionDatabase,
    pub min_sup: usize,
}

/// Seeded corpus: up to 12 items, up to 30 transactions, min_sup 1..=5.
pub fn corpus(cases: usize) -> Vec<CorpusCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    (0..cases as u64)
        .map(|seed| {
            let items = rng.gen_range(1..=12usize);
            let transactions = rng.gen_range(0..=30usize);
            let mean_size = rng.gen_range(1.0..=(items as f64).min(6.0));
            let db = generate_synthetic(&GeneratorSpec {
                items,
                transactions,
                mean_size,
                seed,
            })
            .unwrap();
            CorpusCase {
                seed,
                db,
                min_sup: rng.gen_range(1..=5),
            }
        })
        .collect()
}

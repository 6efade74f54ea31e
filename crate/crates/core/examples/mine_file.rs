//! Mines a transaction file with a support ratio and prints every frequent
//! itemset.
//!
//!     cargo run --example mine_file -- transactions.txt 0.25

use std::fs::File;
use std::io::BufReader;

use fpm_core::report::render_itemsets;
use fpm_core::{mine_dhp, parse_transactions, HashConfig, InputFormat, SupportThreshold};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().ok_or("usage: mine_file PATH [RATIO]")?;
    let ratio: f64 = args.next().map_or(Ok(0.5), |r| r.parse())?;

    let db = parse_transactions(BufReader::new(File::open(&path)?), InputFormat::default())?;
    let threshold = SupportThreshold::from_ratio(ratio, db.len())?;
    let result = mine_dhp(&db, threshold, &HashConfig::default());

    println!(
        "{} transactions, {} items, min_sup {threshold} ({ratio} of rows)",
        db.len(),
        db.universe_size()
    );
    for level in &result.levels {
        println!(
            "level {}: {} candidates, {} frequent, {} rows left",
            level.k,
            level.candidate_count(),
            level.frequent_count(),
            level.db_rows_after
        );
    }
    print!("{}", render_itemsets(db.order(), &result.all_frequent()));
    Ok(())
}

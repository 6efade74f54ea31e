//! Reproduces the four-transaction Apriori vs DHP comparison table.
//!
//!     cargo run --example sample_table

use fpm_core::{compare, render, Format, HashConfig, SupportThreshold, TransactionDatabase};

fn main() -> fpm_core::Result<()> {
    let db = TransactionDatabase::from_rows([
        vec!["A", "C", "D"],
        vec!["B", "C", "E"],
        vec!["A", "B", "C", "E"],
        vec!["B", "E"],
    ])?;
    let report = compare(&db, SupportThreshold::new(2)?, &HashConfig::default())?;
    print!("{}", render(&report, Format::Text));

    let c2 = &report.levels[1];
    println!(
        "\nC2: apriori counts {} candidates over {} rows, dhp counts {} over {} rows",
        c2.apriori.candidates, c2.apriori.db_rows_after, c2.dhp.candidates, c2.dhp.db_rows_after
    );
    Ok(())
}

//! Walks one DHP step by hand: hash the 2-itemsets of every transaction,
//! filter C2 by bucket totals, count, then trim the database.
//!
//!     cargo run --example dhp_walkthrough

use fpm_core::apriori::count_1_itemsets;
use fpm_core::dhp::trim_counters;
use fpm_core::{
    apriori_gen, filter_by_buckets, filter_frequent, hash_bucket, prune_database,
    scan_count_and_hash, HashConfig, SupportThreshold, TransactionDatabase, WorkingDatabase,
};

fn main() -> fpm_core::Result<()> {
    let db = TransactionDatabase::from_rows([
        vec!["A", "C", "D"],
        vec!["B", "C", "E"],
        vec!["A", "B", "C", "E"],
        vec!["B", "E"],
    ])?;
    let order = db.order();
    let config = HashConfig::default();
    let min_sup = SupportThreshold::new(2)?;
    let work = WorkingDatabase::new(&db);

    let (c1, table) = scan_count_and_hash(&work, count_1_itemsets(&db), &config);
    println!("bucket totals after the first scan: {:?}", table.buckets());

    let generated = apriori_gen(&filter_frequent(c1, min_sup));
    for candidate in generated.itemsets() {
        let bucket = hash_bucket(candidate, &config);
        println!(
            "  {:<4} -> bucket {bucket} (total {})",
            order.format(candidate),
            table.buckets()[bucket]
        );
    }
    let c2 = filter_by_buckets(generated, &table, min_sup, &config);
    let (c2, _) = scan_count_and_hash(&work, c2, &config);
    let names: Vec<String> = c2
        .members()
        .iter()
        .map(|c| format!("{}/{}", order.format(&c.itemset), c.support))
        .collect();
    println!("C2 after bucket filtering: {names:?}");

    for txn in work.rows() {
        println!(
            "  a[i] for {:<8} = {:?}",
            order.format(&txn.items),
            trim_counters(txn, &c2)
        );
    }
    let (trimmed, rows) = prune_database(&work, &c2, 2);
    let survivors: Vec<String> = trimmed
        .rows()
        .iter()
        .map(|t| order.format(&t.items))
        .collect();
    println!("{rows} rows survive: {survivors:?}");
    Ok(())
}

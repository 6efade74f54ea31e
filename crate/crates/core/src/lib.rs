//! Level-wise frequent itemset mining with Apriori and DHP (direct hashing
//! and pruning), instrumented per level so the two can be compared: how many
//! candidates each generates, how many survive, and how far DHP shrinks the
//! database it scans.
//!
//! ```
//! use fpm_core::{compare, HashConfig, SupportThreshold, TransactionDatabase};
//!
//! let db = TransactionDatabase::from_rows([
//!     vec!["A", "C", "D"],
//!     vec!["B", "C", "E"],
//!     vec!["A", "B", "C", "E"],
//!     vec!["B", "E"],
//! ])?;
//! let report = compare(&db, SupportThreshold::new(2)?, &HashConfig::default())?;
//! assert_eq!(report.levels[1].apriori.candidates, 6);
//! assert_eq!(report.levels[1].dhp.candidates, 4);
//! assert_eq!(report.levels[1].dhp.db_rows_after, 2);
//! # Ok::<(), fpm_core::Error>(())
//! ```

pub mod apriori;
pub mod cli;
pub mod dhp;
mod error;
pub mod ingest;
pub mod model;
pub mod oracle;
pub mod report;

pub use apriori::{
    apriori_gen, count_support, filter_frequent, frequent_1_itemsets, has_infrequent_subset, join,
    mine_apriori, Algorithm, CandidateSet, FrequentSet, LevelRecord, MiningResult,
};
pub use dhp::{
    filter_by_buckets, hash_bucket, mine_dhp, prune_database, scan_count_and_hash,
    trim_transaction, HashConfig, HashTable, WorkingDatabase,
};
pub use error::{Error, Result};
pub use ingest::{generate_synthetic, parse_transactions, GeneratorSpec, InputFormat, Separator};
pub use model::{
    CountedItemset, Item, ItemOrderMap, Itemset, SupportThreshold, Transaction, TransactionDatabase,
};
pub use oracle::enumerate_frequent;
pub use report::{compare, render, ComparisonReport, Format};

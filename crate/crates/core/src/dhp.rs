//! Direct hashing and pruning.
//!
//! Level k counts Ck over the live rows, then trims each row to the items
//! that occur in at least k of the candidates it contains, dropping rows left
//! with too few items to hold a (k+1)-itemset. Every (k+1)-subset of the
//! surviving rows is hashed into a bucket table, and C(k+1) is
//! `apriori_gen(Lk)` minus candidates whose bucket total is below `min_sup`.
//!
//! A bucket total is an upper bound on the support of every itemset hashed
//! into it, and trimming never removes an occurrence of a frequent
//! (k+1)-itemset, so the frequent sets and their supports match Apriori's.

use itertools::Itertools;

use crate::apriori::{
    apriori_gen, count_1_itemsets, count_over, filter_frequent, Algorithm, CandidateSet,
    LevelRecord, MiningResult,
};
use crate::error::{Error, Result};
use crate::model::{Itemset, SupportThreshold, Transaction, TransactionDatabase};

pub const DEFAULT_BUCKETS: usize = 7;
pub const DEFAULT_BASE: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HashConfig {
    bucket_count: usize,
    base: u64,
    hash_until_level: Option<usize>,
}

impl Default for HashConfig {
    fn default() -> Self {
        HashConfig {
            bucket_count: DEFAULT_BUCKETS,
            base: DEFAULT_BASE,
            hash_until_level: None,
        }
    }
}

impl HashConfig {
    pub fn new(bucket_count: usize, base: u64) -> Result<Self> {
        if bucket_count == 0 {
            return Err(Error::InvalidHashConfig(
                "bucket count must be at least 1".into(),
            ));
        }
        if base < 2 {
            return Err(Error::InvalidHashConfig("base must be at least 2".into()));
        }
        Ok(HashConfig {
            bucket_count,
            base,
            hash_until_level: None,
        })
    }

    /// Only bucket-filter candidates of size `level + 1` and below. Later
    /// levels use plain `apriori_gen` candidates; database trimming continues.
    pub fn hash_until_level(mut self, level: Option<usize>) -> Self {
        self.hash_until_level = level;
        self
    }

    pub fn bucket_count(&self) -> usize {
        self.bucket_count
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn hashes_at(&self, level: usize) -> bool {
        self.hash_until_level.is_none_or(|last| level <= last)
    }
}

/// Bucket occurrence counters for itemsets of size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashTable {
    k: usize,
    buckets: Vec<usize>,
}

impl HashTable {
    pub fn new(k: usize, config: &HashConfig) -> Self {
        HashTable {
            k,
            buckets: vec![0; config.bucket_count],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn buckets(&self) -> &[usize] {
        &self.buckets
    }

    pub fn count(&self, itemset: &Itemset, config: &HashConfig) -> usize {
        self.buckets[hash_bucket(itemset, config)]
    }

    fn insert(&mut self, itemset: &[u32], config: &HashConfig) {
        self.buckets[hash_ranks(itemset, config)] += 1;
    }
}

/// `(...((r1 * base + r2) * base + r3) ... + rk) mod B` over item ranks,
/// reduced at every step.
pub fn hash_bucket(itemset: &Itemset, config: &HashConfig) -> usize {
    hash_ranks(itemset.ranks(), config)
}

fn hash_ranks(ranks: &[u32], config: &HashConfig) -> usize {
    let modulus = config.bucket_count as u128;
    let base = config.base as u128;
    ranks
        .iter()
        .fold(0u128, |acc, &r| (acc * base + r as u128) % modulus) as usize
}

/// The progressively trimmed copy of the database that DHP scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingDatabase {
    rows: Vec<Transaction>,
}

impl WorkingDatabase {
    pub fn new(db: &TransactionDatabase) -> Self {
        WorkingDatabase {
            rows: db.transactions().to_vec(),
        }
    }

    pub fn rows(&self) -> &[Transaction] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Hashes every `k`-subset of every live row.
pub fn hash_itemsets(work: &WorkingDatabase, k: usize, config: &HashConfig) -> HashTable {
    let mut table = HashTable::new(k, config);
    for txn in work.rows() {
        for subset in txn.items.ranks().iter().copied().combinations(k) {
            table.insert(&subset, config);
        }
    }
    table
}

/// One pass over the live rows: counts `candidates` and hashes all
/// `(k+1)`-subsets into a fresh table.
pub fn scan_count_and_hash(
    work: &WorkingDatabase,
    candidates: CandidateSet,
    config: &HashConfig,
) -> (CandidateSet, HashTable) {
    let next_k = candidates.k() + 1;
    (
        count_over(work.rows(), candidates),
        hash_itemsets(work, next_k, config),
    )
}

/// Keeps the candidates whose bucket total reaches `min_sup`.
pub fn filter_by_buckets(
    mut candidates: CandidateSet,
    table: &HashTable,
    threshold: SupportThreshold,
    config: &HashConfig,
) -> CandidateSet {
    assert_eq!(
        table.k(),
        candidates.k(),
        "hash table built for another level"
    );
    candidates.retain(|c| threshold.admits(table.count(&c.itemset, config)));
    candidates
}

/// Per-item counts `a[i]`: how many candidates contained in `txn` include
/// the item at position `i` of the transaction.
pub fn trim_counters(txn: &Transaction, candidates: &CandidateSet) -> Vec<usize> {
    let items = txn.items.ranks();
    let mut counters = vec![0; items.len()];
    for candidate in candidates.itemsets().filter(|c| txn.contains(c)) {
        for rank in candidate.ranks() {
            // contains() guarantees presence.
            let pos = items
                .binary_search(rank)
                .expect("candidate item in transaction");
            counters[pos] += 1;
        }
    }
    counters
}

/// Drops items with `a[i] < k`; `None` when fewer than `k + 1` items survive.
pub fn trim_transaction(
    txn: &Transaction,
    candidates: &CandidateSet,
    k: usize,
) -> Option<Transaction> {
    let counters = trim_counters(txn, candidates);
    let kept: Vec<u32> = txn
        .items
        .ranks()
        .iter()
        .zip(&counters)
        .filter(|(_, &a)| a >= k)
        .map(|(&rank, _)| rank)
        .collect();
    if kept.len() < k + 1 {
        return None;
    }
    Some(Transaction::new(
        txn.id,
        Itemset::from_sorted_unchecked(kept),
    ))
}

pub fn prune_database(
    work: &WorkingDatabase,
    candidates: &CandidateSet,
    k: usize,
) -> (WorkingDatabase, usize) {
    let rows: Vec<Transaction> = work
        .rows()
        .iter()
        .filter_map(|txn| trim_transaction(txn, candidates, k))
        .collect();
    let count = rows.len();
    (WorkingDatabase { rows }, count)
}

/// What happened to the candidates of one level k ≥ 2 before counting.
#[derive(Debug)]
pub struct CandidateFiltering<'a> {
    pub k: usize,
    /// `apriori_gen` output before bucket filtering.
    pub generated: &'a CandidateSet,
    /// Candidates carried into the level-k scan.
    pub kept: &'a CandidateSet,
    /// Table consulted, if hashing was active after level k-1.
    pub table: Option<&'a HashTable>,
    /// The rows the table was built from.
    pub hashed_rows: &'a WorkingDatabase,
}

pub fn mine_dhp(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    config: &HashConfig,
) -> MiningResult {
    mine_dhp_observed(db, threshold, config, |_| {})
}

/// [`mine_dhp`] with a callback invoked at each bucket-filtering step.
pub fn mine_dhp_observed(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    config: &HashConfig,
    mut observe: impl FnMut(&CandidateFiltering<'_>),
) -> MiningResult {
    let mut levels = Vec::new();
    let mut candidates = count_1_itemsets(db);
    let mut scanned = WorkingDatabase::new(db);
    let mut k = 1;

    while !candidates.is_empty() {
        let counted = count_over(scanned.rows(), candidates);
        let frequent = filter_frequent(counted.clone(), threshold);
        let (work, rows_after) = prune_database(&scanned, &counted, k);
        levels.push(LevelRecord {
            k,
            candidates: counted.into_members(),
            frequent: frequent.members().to_vec(),
            db_rows_after: rows_after,
        });
        if frequent.is_empty() || work.is_empty() {
            break;
        }

        let generated = apriori_gen(&frequent);
        // The next level's table comes from the rows that level will scan.
        let table = (config.hashes_at(k) && !generated.is_empty())
            .then(|| hash_itemsets(&work, k + 1, config));
        let kept = match &table {
            Some(table) => filter_by_buckets(generated.clone(), table, threshold, config),
            None => generated.clone(),
        };
        observe(&CandidateFiltering {
            k: k + 1,
            generated: &generated,
            kept: &kept,
            table: table.as_ref(),
            hashed_rows: &work,
        });
        candidates = kept;
        scanned = work;
        k += 1;
    }

    MiningResult {
        algorithm: Algorithm::Dhp,
        threshold,
        levels,
    }
}

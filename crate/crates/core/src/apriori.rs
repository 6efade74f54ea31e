//! Level-wise candidate generation and test.
//!
//! Each level joins the previous frequent set with itself, prunes joined
//! candidates that have an infrequent subset, and counts the survivors
//! against the full database. The database is never modified.

use serde::{Deserialize, Serialize};

use crate::model::{CountedItemset, Itemset, SupportThreshold, Transaction, TransactionDatabase};

/// Candidate itemsets of one size, canonically sorted and distinct.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateSet {
    k: usize,
    members: Vec<CountedItemset>,
}

impl CandidateSet {
    /// Sorts and deduplicates `itemsets`; supports start at zero.
    pub fn from_itemsets(k: usize, itemsets: impl IntoIterator<Item = Itemset>) -> Self {
        let mut members: Vec<CountedItemset> = itemsets
            .into_iter()
            .inspect(|s| assert_eq!(s.len(), k, "candidate of wrong size"))
            .map(CountedItemset::uncounted)
            .collect();
        members.sort();
        members.dedup_by(|a, b| a.itemset == b.itemset);
        CandidateSet { k, members }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[CountedItemset] {
        &self.members
    }

    pub fn into_members(self) -> Vec<CountedItemset> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn itemsets(&self) -> impl Iterator<Item = &Itemset> {
        self.members.iter().map(|m| &m.itemset)
    }

    pub fn contains(&self, itemset: &Itemset) -> bool {
        self.members
            .binary_search_by(|m| m.itemset.cmp(itemset))
            .is_ok()
    }

    pub(crate) fn retain(&mut self, keep: impl FnMut(&CountedItemset) -> bool) {
        self.members.retain(keep);
    }

    pub(crate) fn members_mut(&mut self) -> &mut [CountedItemset] {
        &mut self.members
    }
}

/// Candidates that met the support threshold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequentSet {
    k: usize,
    members: Vec<CountedItemset>,
}

impl FrequentSet {
    /// Builds a frequent set directly; members are sorted and must all have size `k`.
    pub fn new(k: usize, mut members: Vec<CountedItemset>) -> Self {
        assert!(members.iter().all(|m| m.itemset.len() == k));
        members.sort();
        members.dedup_by(|a, b| a.itemset == b.itemset);
        FrequentSet { k, members }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[CountedItemset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, itemset: &Itemset) -> bool {
        self.members
            .binary_search_by(|m| m.itemset.cmp(itemset))
            .is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Apriori,
    Dhp,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Apriori => "apriori",
            Algorithm::Dhp => "dhp",
        }
    }
}

/// One level of a mining run: Ck, Lk and the database size after the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    pub k: usize,
    pub candidates: Vec<CountedItemset>,
    pub frequent: Vec<CountedItemset>,
    pub db_rows_after: usize,
}

impl LevelRecord {
    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    pub fn frequent_count(&self) -> usize {
        self.frequent.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningResult {
    pub algorithm: Algorithm,
    pub threshold: SupportThreshold,
    pub levels: Vec<LevelRecord>,
}

impl MiningResult {
    /// Every frequent itemset over all levels, ordered by size then canonically.
    pub fn all_frequent(&self) -> Vec<CountedItemset> {
        self.levels
            .iter()
            .flat_map(|l| l.frequent.iter().cloned())
            .collect()
    }

    pub fn level(&self, k: usize) -> Option<&LevelRecord> {
        self.levels.get(k.checked_sub(1)?)
    }
}

/// C1: every universe item with its support.
pub fn count_1_itemsets(db: &TransactionDatabase) -> CandidateSet {
    let mut counts = vec![0usize; db.universe_size()];
    for txn in db.transactions() {
        for &rank in txn.items.ranks() {
            counts[rank as usize - 1] += 1;
        }
    }
    CandidateSet {
        k: 1,
        members: (1..)
            .zip(counts)
            .map(|(rank, support)| {
                CountedItemset::new(Itemset::from_sorted_unchecked(vec![rank]), support)
            })
            .collect(),
    }
}

pub fn frequent_1_itemsets(db: &TransactionDatabase, threshold: SupportThreshold) -> FrequentSet {
    filter_frequent(count_1_itemsets(db), threshold)
}

/// Pairs of k-itemsets sharing their first k-1 items, left last item below right.
pub fn join(frequent: &FrequentSet) -> Vec<Itemset> {
    let members = frequent.members();
    let mut out = Vec::new();
    for (i, left) in members.iter().enumerate() {
        let left = left.itemset.ranks();
        let (prefix, left_last) = match left.split_last() {
            Some((last, prefix)) => (prefix, *last),
            None => continue,
        };
        for right in &members[i + 1..] {
            let right = right.itemset.ranks();
            // Members are sorted, so the shared-prefix block is contiguous.
            if !right.starts_with(prefix) {
                break;
            }
            let right_last = right[right.len() - 1];
            if left_last < right_last {
                let mut joined = Vec::with_capacity(left.len() + 1);
                joined.extend_from_slice(left);
                joined.push(right_last);
                out.push(Itemset::from_sorted_unchecked(joined));
            }
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// True iff some one-smaller subset of `candidate` is missing from `frequent`.
pub fn has_infrequent_subset(candidate: &Itemset, frequent: &FrequentSet) -> bool {
    candidate
        .drop_one_subsets()
        .any(|subset| !frequent.contains(&subset))
}

pub fn apriori_gen(frequent: &FrequentSet) -> CandidateSet {
    let k = frequent.k() + 1;
    let kept = join(frequent)
        .into_iter()
        .filter(|c| !has_infrequent_subset(c, frequent));
    CandidateSet::from_itemsets(k, kept)
}

/// Counts candidate supports over an arbitrary sequence of transactions.
pub(crate) fn count_over<'a>(
    transactions: impl IntoIterator<Item = &'a Transaction>,
    mut candidates: CandidateSet,
) -> CandidateSet {
    for member in candidates.members_mut() {
        member.support = 0;
    }
    for txn in transactions {
        if txn.items.len() < candidates.k() {
            continue;
        }
        for member in candidates.members_mut() {
            if txn.contains(&member.itemset) {
                member.support += 1;
            }
        }
    }
    candidates
}

pub fn count_support(db: &TransactionDatabase, candidates: CandidateSet) -> CandidateSet {
    count_over(db.transactions(), candidates)
}

pub fn filter_frequent(candidates: CandidateSet, threshold: SupportThreshold) -> FrequentSet {
    let k = candidates.k();
    FrequentSet {
        k,
        members: candidates
            .into_members()
            .into_iter()
            .filter(|m| threshold.admits(m.support))
            .collect(),
    }
}

pub fn mine_apriori(db: &TransactionDatabase, threshold: SupportThreshold) -> MiningResult {
    let rows = db.len();
    let mut levels = Vec::new();

    let c1 = count_1_itemsets(db);
    if !c1.is_empty() {
        let mut frequent = filter_frequent(c1.clone(), threshold);
        levels.push(LevelRecord {
            k: 1,
            candidates: c1.into_members(),
            frequent: frequent.members().to_vec(),
            db_rows_after: rows,
        });
        while !frequent.is_empty() {
            let candidates = apriori_gen(&frequent);
            if candidates.is_empty() {
                break;
            }
            let counted = count_support(db, candidates);
            frequent = filter_frequent(counted.clone(), threshold);
            levels.push(LevelRecord {
                k: counted.k(),
                candidates: counted.into_members(),
                frequent: frequent.members().to_vec(),
                db_rows_after: rows,
            });
        }
    }

    MiningResult {
        algorithm: Algorithm::Apriori,
        threshold,
        levels,
    }
}

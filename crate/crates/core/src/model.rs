//! Items, itemsets, transactions and the transaction database.
//!
//! Items are interned into ranks `1..=n` by ascending token order. Every
//! itemset is stored as a strictly ascending rank sequence, so subset tests
//! are ordered merge walks and the derived `Ord` is the canonical
//! lexicographic order used for all emitted collections.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Position of an item in the database's canonical order, starting at 1.
pub type Rank = u32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item(String);

impl Item {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        let bad = token.is_empty()
            || token
                .chars()
                .any(|c| c == ',' || c == '#' || c.is_whitespace());
        if bad {
            return Err(Error::InvalidItem(token));
        }
        Ok(Item(token))
    }

    pub fn token(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Bijection between the item universe and the ranks `1..=n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ItemOrderMap {
    items: Vec<Item>,
    ranks: HashMap<String, Rank>,
}

impl ItemOrderMap {
    /// Ranks the universe by ascending token. Duplicates collapse.
    pub fn build<I>(universe: I) -> Result<Self>
    where
        I: IntoIterator<Item = Item>,
    {
        let sorted: BTreeSet<Item> = universe.into_iter().collect();
        if sorted.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(Self::from_sorted(sorted))
    }

    fn from_sorted(sorted: BTreeSet<Item>) -> Self {
        let items: Vec<Item> = sorted.into_iter().collect();
        let ranks = items
            .iter()
            .enumerate()
            .map(|(i, item)| (item.0.clone(), i as Rank + 1))
            .collect();
        ItemOrderMap { items, ranks }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn rank(&self, token: &str) -> Option<Rank> {
        self.ranks.get(token).copied()
    }

    pub fn item(&self, rank: Rank) -> &Item {
        &self.items[rank as usize - 1]
    }

    /// Items in rank order.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// Canonical itemset from tokens, in any order and with repeats.
    pub fn itemset<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Itemset> {
        let ranks = tokens
            .iter()
            .map(|t| {
                self.rank(t.as_ref())
                    .ok_or_else(|| Error::UnknownItem(t.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Itemset::from_ranks(ranks))
    }

    pub fn tokens(&self, itemset: &Itemset) -> Vec<String> {
        itemset
            .ranks()
            .iter()
            .map(|&r| self.item(r).token().to_owned())
            .collect()
    }

    /// Comma-joined tokens, e.g. `B,C,E`.
    pub fn format(&self, itemset: &Itemset) -> String {
        itemset
            .ranks()
            .iter()
            .map(|&r| self.item(r).token())
            .join(",")
    }
}

/// Canonical (strictly ascending by rank) set of items.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Itemset(Vec<Rank>);

impl Itemset {
    /// Sorts and deduplicates.
    pub fn from_ranks(mut ranks: Vec<Rank>) -> Self {
        ranks.sort_unstable();
        ranks.dedup();
        Itemset(ranks)
    }

    pub(crate) fn from_sorted_unchecked(ranks: Vec<Rank>) -> Self {
        debug_assert!(ranks.windows(2).all(|w| w[0] < w[1]));
        Itemset(ranks)
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Rank> {
        self.0.last().copied()
    }

    /// Ordered merge walk: true iff every item of `self` occurs in `other`.
    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for &want in &self.0 {
            for &have in rest.by_ref() {
                if have == want {
                    continue 'outer;
                }
                if have > want {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// All size-`k` subsets in lexicographic order.
    pub fn k_subsets(&self, k: usize) -> Result<Vec<Itemset>> {
        if k == 0 || k > self.len() {
            return Err(Error::InvalidArity { k, len: self.len() });
        }
        Ok(self
            .0
            .iter()
            .copied()
            .combinations(k)
            .map(Itemset)
            .collect())
    }

    /// The `len - 1` subsets obtained by deleting one item, in lexicographic order.
    pub(crate) fn drop_one_subsets(&self) -> impl Iterator<Item = Itemset> + '_ {
        (0..self.0.len()).rev().map(move |skip| {
            let mut ranks = self.0.clone();
            ranks.remove(skip);
            Itemset(ranks)
        })
    }

    /// Appends a rank strictly greater than the current last item.
    pub(crate) fn extended(&self, rank: Rank) -> Itemset {
        debug_assert!(self.last().is_none_or(|last| last < rank));
        let mut ranks = Vec::with_capacity(self.0.len() + 1);
        ranks.extend_from_slice(&self.0);
        ranks.push(rank);
        Itemset(ranks)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    pub id: u64,
    pub items: Itemset,
}

impl Transaction {
    pub fn new(id: u64, items: Itemset) -> Self {
        Transaction { id, items }
    }

    pub fn contains(&self, candidate: &Itemset) -> bool {
        candidate.is_subset_of(&self.items)
    }
}

/// Minimum absolute support count, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportThreshold(usize);

impl SupportThreshold {
    pub fn new(min_sup: usize) -> Result<Self> {
        if min_sup == 0 {
            return Err(Error::InvalidThreshold("min_sup must be at least 1".into()));
        }
        Ok(SupportThreshold(min_sup))
    }

    /// `ceil(ratio * transactions)`, floored at 1. Ratio must lie in (0, 1].
    pub fn from_ratio(ratio: f64, transactions: usize) -> Result<Self> {
        if !(ratio > 0.0 && ratio <= 1.0) {
            return Err(Error::InvalidThreshold(format!(
                "support ratio {ratio} outside (0, 1]"
            )));
        }
        // Absorb representation error such as 0.1 * 30 = 3.0000000000000004.
        let scaled = ratio * transactions as f64;
        let count = (scaled - 1e-9 * scaled.max(1.0)).ceil().max(1.0) as usize;
        Ok(SupportThreshold(count))
    }

    pub fn min_sup(self) -> usize {
        self.0
    }

    pub fn admits(self, support: usize) -> bool {
        support >= self.0
    }
}

impl fmt::Display for SupportThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountedItemset {
    pub itemset: Itemset,
    pub support: usize,
}

impl CountedItemset {
    pub fn new(itemset: Itemset, support: usize) -> Self {
        CountedItemset { itemset, support }
    }

    pub fn uncounted(itemset: Itemset) -> Self {
        CountedItemset {
            itemset,
            support: 0,
        }
    }
}

/// Immutable set of transactions plus the canonical order of its item universe.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Transaction>,
    order: ItemOrderMap,
}

impl TransactionDatabase {
    /// Builds a database from rows of item tokens. Ids are assigned 1..=m in
    /// row order; duplicate tokens within a row are merged.
    pub fn from_rows<R, S>(rows: impl IntoIterator<Item = R>) -> Result<Self>
    where
        R: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self::with_universe(rows, std::iter::empty::<&str>())
    }

    /// Like [`from_rows`](Self::from_rows), with extra universe items that
    /// may not occur in any row.
    pub fn with_universe<R, S, U>(
        rows: impl IntoIterator<Item = R>,
        universe: impl IntoIterator<Item = U>,
    ) -> Result<Self>
    where
        R: IntoIterator<Item = S>,
        S: AsRef<str>,
        U: AsRef<str>,
    {
        let rows: Vec<Vec<Item>> = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| Item::new(t.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut all: BTreeSet<Item> = universe
            .into_iter()
            .map(|t| Item::new(t.as_ref()))
            .collect::<Result<_>>()?;
        all.extend(rows.iter().flatten().cloned());
        let order = ItemOrderMap::from_sorted(all);
        let transactions = rows
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                let ranks = row.iter().map(|item| order.ranks[item.token()]).collect();
                Transaction::new(i as u64 + 1, Itemset::from_ranks(ranks))
            })
            .collect();
        Ok(TransactionDatabase {
            transactions,
            order,
        })
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    pub fn order(&self) -> &ItemOrderMap {
        &self.order
    }

    pub fn universe_size(&self) -> usize {
        self.order.len()
    }

    pub fn itemset_support(&self, itemset: &Itemset) -> Result<usize> {
        if itemset.is_empty() {
            return Err(Error::InvalidItemset("empty itemset has no support".into()));
        }
        Ok(self
            .transactions
            .iter()
            .filter(|t| t.contains(itemset))
            .count())
    }

    /// Each transaction as a list of tokens in canonical order.
    pub fn token_rows(&self) -> Vec<Vec<String>> {
        self.transactions
            .iter()
            .map(|t| self.order.tokens(&t.items))
            .collect()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn sample_db() -> TransactionDatabase {
        TransactionDatabase::from_rows([
            vec!["A", "C", "D"],
            vec!["B", "C", "E"],
            vec!["A", "B", "C", "E"],
            vec!["B", "E"],
        ])
        .unwrap()
    }

    pub fn order_of(tokens: &[&str]) -> ItemOrderMap {
        ItemOrderMap::build(tokens.iter().map(|t| Item::new(*t).unwrap())).unwrap()
    }
}

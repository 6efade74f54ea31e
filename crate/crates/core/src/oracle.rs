//! Brute-force frequent itemset enumeration, used as ground truth.
//!
//! Depth-first over the item universe in rank order, counting every visited
//! itemset against the whole database. An infrequent itemset is not
//! extended. Nothing here touches the miners' join, prune or hashing code.

use crate::error::{Error, Result};
use crate::model::{CountedItemset, Itemset, SupportThreshold, TransactionDatabase};

pub const MAX_ORACLE_ITEMS: usize = 20;

/// Every frequent itemset of size at most `max_k` (unbounded if `None`),
/// ordered by size, then canonically.
pub fn enumerate_frequent(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    max_k: Option<usize>,
) -> Result<Vec<CountedItemset>> {
    let n = db.universe_size();
    if n > MAX_ORACLE_ITEMS {
        return Err(Error::OracleScaleExceeded {
            items: n,
            limit: MAX_ORACLE_ITEMS,
        });
    }
    let max_k = max_k.unwrap_or(n);
    let mut found = Vec::new();
    let mut stack: Vec<Itemset> = Vec::new();
    // Seed with singletons, highest rank first so pops come out in order.
    for rank in (1..=n as u32).rev() {
        stack.push(Itemset::from_ranks(vec![rank]));
    }
    while let Some(itemset) = stack.pop() {
        if itemset.len() > max_k {
            continue;
        }
        let support = db.itemset_support(&itemset)?;
        if !threshold.admits(support) {
            continue;
        }
        let last = itemset.last().unwrap_or(0);
        for next in ((last + 1)..=n as u32).rev() {
            stack.push(itemset.extended(next));
        }
        found.push(CountedItemset::new(itemset, support));
    }
    found.sort_by(|a, b| {
        a.itemset
            .len()
            .cmp(&b.itemset.len())
            .then_with(|| a.itemset.cmp(&b.itemset))
    });
    Ok(found)
}

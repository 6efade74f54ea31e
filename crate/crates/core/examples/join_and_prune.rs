//! Candidate generation: self-join of L3, then pruning of joined itemsets
//! that have an infrequent 3-subset.
//!
//!     cargo run --example join_and_prune

use fpm_core::{
    apriori_gen, has_infrequent_subset, join, CountedItemset, FrequentSet, Item, ItemOrderMap,
};

fn main() -> fpm_core::Result<()> {
    let order = ItemOrderMap::build(["a", "b", "c", "d", "e"].map(|t| Item::new(t).unwrap()))?;
    let l3 = ["abc", "abd", "acd", "ace", "bcd"]
        .iter()
        .map(|s| {
            let tokens: Vec<String> = s.chars().map(String::from).collect();
            order.itemset(&tokens).map(CountedItemset::uncounted)
        })
        .collect::<fpm_core::Result<Vec<_>>>()?;
    let l3 = FrequentSet::new(3, l3);

    for joined in join(&l3) {
        let verdict = if has_infrequent_subset(&joined, &l3) {
            "pruned"
        } else {
            "kept"
        };
        println!("{:<8} {verdict}", order.tokens(&joined).concat());
    }

    let c4 = apriori_gen(&l3);
    let names: Vec<String> = c4.itemsets().map(|s| order.tokens(s).concat()).collect();
    println!("C4 = {names:?}");
    Ok(())
}

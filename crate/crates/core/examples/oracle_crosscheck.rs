//! Mines seeded synthetic databases with both algorithms and checks them
//! against brute-force enumeration.
//!
//!     cargo run --example oracle_crosscheck -- [databases]

use fpm_core::{
    enumerate_frequent, generate_synthetic, mine_apriori, mine_dhp, GeneratorSpec, HashConfig,
    SupportThreshold,
};

fn main() -> fpm_core::Result<()> {
    let databases: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100);
    let config = HashConfig::new(101, 10)?;
    let mut itemsets = 0;
    let mut saved = 0;
    for seed in 0..databases {
        let db = generate_synthetic(&GeneratorSpec {
            items: 12,
            transactions: 30,
            mean_size: 5.0,
            seed,
        })?;
        let threshold = SupportThreshold::new(5 + (seed % 3) as usize)?;
        let oracle = enumerate_frequent(&db, threshold, None)?;
        let apriori = mine_apriori(&db, threshold);
        let dhp = mine_dhp(&db, threshold, &config);
        assert_eq!(apriori.all_frequent(), oracle, "apriori, seed {seed}");
        assert_eq!(dhp.all_frequent(), oracle, "dhp, seed {seed}");
        itemsets += oracle.len();
        if let (Some(a), Some(d)) = (apriori.level(2), dhp.level(2)) {
            saved += a.candidate_count() - d.candidate_count();
        }
    }
    println!("{databases} databases, {itemsets} frequent itemsets, all engines agree");
    println!("bucket filtering removed {saved} C2 candidates in total");
    Ok(())
}

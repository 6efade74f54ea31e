//! Renders one comparison as text, CSV and JSON, and reads the JSON back.
//!
//!     cargo run --example report_formats

use fpm_core::{
    compare, generate_synthetic, render, ComparisonReport, Format, GeneratorSpec, HashConfig,
    SupportThreshold,
};

fn main() -> fpm_core::Result<()> {
    let db = generate_synthetic(&GeneratorSpec {
        items: 8,
        transactions: 20,
        mean_size: 4.0,
        seed: 7,
    })?;
    let report = compare(&db, SupportThreshold::new(4)?, &HashConfig::new(11, 10)?)?;
    let counts = report.clone().without_listings();

    print!("{}", render(&counts, Format::Text));
    println!();
    print!("{}", render(&counts, Format::Csv));

    let json = render(&report, Format::Json);
    let back = ComparisonReport::from_json(&json)?;
    assert_eq!(back, report);
    println!(
        "\njson: {} bytes, round-trips to an equal report",
        json.len()
    );
    Ok(())
}

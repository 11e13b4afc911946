//! The groups of order at most 15, with element-order census and centers.
//!
//! `cargo run --example catalog`

use endograph::group::{catalog_entries, CATALOG_MAX_ORDER};

fn main() -> endograph::Result<()> {
    for entry in catalog_entries(CATALOG_MAX_ORDER)? {
        let g = entry.build()?;
        let census: Vec<String> = g.order_census().iter().map(|(o, c)| format!("{c}x{o}")).collect();
        let shape = g.abelian_shape().map_or_else(|| "non-abelian".to_string(), |s| s.to_string());
        println!(
            "{:<12} {:<9} |Z(G)| = {:<2} orders [{}]  {shape}",
            entry.selector(),
            entry.name,
            g.center().len(),
            census.join(" ")
        );
    }
    Ok(())
}

//! Which abelian groups have a complete endomorphism graph.
//!
//! `cargo run --release --example completeness [-- MAX_ORDER]`

use endograph::builders::{endo_digraph, is_completeness_shape};
use endograph::group::{make_abelian, AbelianShape};
use endograph::morphism::{ArcOracle, ArcStrategy, DEFAULT_ENUM_BUDGET};

fn main() -> endograph::Result<()> {
    let max: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(64);
    let mut complete = Vec::new();
    for shape in AbelianShape::all_up_to(max) {
        let g = make_abelian(&shape)?;
        let oracle = ArcOracle::with_strategy(&g, ArcStrategy::AbelianFastPath, DEFAULT_ENUM_BUDGET)?;
        let is_complete = endo_digraph(&oracle)?.underlying_simple_graph().is_complete();
        assert_eq!(is_complete, is_completeness_shape(&shape), "{shape}");
        if is_complete {
            complete.push(shape.to_string());
        }
    }
    println!("complete endomorphism graphs among abelian groups of order <= {max}:");
    for s in &complete {
        println!("  {s}");
    }
    Ok(())
}

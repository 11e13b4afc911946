//! Looks for non-isomorphic groups of equal order whose directed
//! endomorphism graphs are isomorphic, and prints the vertex map for each hit.
//!
//! `cargo run --example conjecture_hunt`

use endograph::builders::{build, GraphKind};
use endograph::graph::find_digraph_isomorphism;
use endograph::group::catalog_entries;
use endograph::morphism::DEFAULT_ENUM_BUDGET;
use endograph::verifier::hunt_converse;

fn main() -> endograph::Result<()> {
    let check = hunt_converse(15, DEFAULT_ENUM_BUDGET)?;
    println!("{} equal-order pairs compared", check.witnesses.len());
    for note in &check.notes {
        println!("note: {note}");
    }
    let entries = catalog_entries(15)?;
    for w in check.counterexamples() {
        let (left, right) = w.group.split_once(" / ").expect("pair label");
        let find = |sel: &str| entries.iter().find(|e| e.selector() == sel).expect("catalog selector");
        let (g, h) = (find(left).build()?, find(right).build()?);
        let dg = build(&g, GraphKind::EndoDirected, false, DEFAULT_ENUM_BUDGET)?;
        let dh = build(&h, GraphKind::EndoDirected, false, DEFAULT_ENUM_BUDGET)?;
        let map = find_digraph_isomorphism(dg.graph.as_directed().unwrap(), dh.graph.as_directed().unwrap())?
            .expect("reported as isomorphic");
        println!("\n{} and {} have isomorphic directed endomorphism graphs", g.name(), h.name());
        for (x, y) in map.iter().enumerate() {
            println!("  {x} (order {}) -> {y} (order {})", g.elem_order(x), h.elem_order(*y));
        }
    }
    Ok(())
}

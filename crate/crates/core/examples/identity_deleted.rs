//! The directed endomorphism graph with the identity removed: strong
//! connectivity, completeness and Hamiltonicity side by side.
//!
//! `cargo run --example identity_deleted`

use endograph::builders::{build, GraphKind};
use endograph::graph::{has_hamiltonian_cycle, is_strongly_connected, is_tree, minimum_point_basis};
use endograph::group::catalog_entries;
use endograph::morphism::DEFAULT_ENUM_BUDGET;

fn main() -> endograph::Result<()> {
    println!("{:<12} {:<9} {:>4} {:>7} {:>9} {:>11} {:>5}  sources", "selector", "group", "|G*|", "strong", "complete", "hamiltonian", "tree");
    for entry in catalog_entries(15)? {
        let g = entry.build()?;
        let built = build(&g, GraphKind::EndoDirected, true, DEFAULT_ENUM_BUDGET)?;
        let d = built.graph.as_directed().expect("directed kind");
        let labels = d.labels();
        let sources: Vec<usize> = minimum_point_basis(d).iter().map(|&v| labels[v]).collect();
        println!(
            "{:<12} {:<9} {:>4} {:>7} {:>9} {:>11} {:>5}  {sources:?}",
            entry.selector(),
            g.name(),
            d.vertex_count(),
            is_strongly_connected(d),
            d.is_complete_digraph(),
            has_hamiltonian_cycle(d)?,
            is_tree(&d.underlying_simple_graph()),
        );
    }
    Ok(())
}

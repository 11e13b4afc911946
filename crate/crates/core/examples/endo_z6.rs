//! Endomorphisms of Z6 and its endomorphism graphs.
//!
//! `cargo run --example endo_z6`

use endograph::builders::{build, GraphKind};
use endograph::graph::{maximal_cliques, to_dot};
use endograph::group::make_cyclic;
use endograph::morphism::{enumerate_endomorphisms, DEFAULT_ENUM_BUDGET};

fn main() -> endograph::Result<()> {
    let z6 = make_cyclic(6);
    let monoid = enumerate_endomorphisms(&z6, DEFAULT_ENUM_BUDGET)?;
    println!("{} endomorphisms of Z6:", monoid.len());
    for f in monoid.morphisms() {
        let tag = if f.is_bijective() { "  (automorphism)" } else { "" };
        println!("  x -> {}x  {:?}{tag}", f.apply(1), f.image());
    }

    let directed = build(&z6, GraphKind::EndoDirected, false, DEFAULT_ENUM_BUDGET)?;
    print!("\n{}", to_dot(&directed.graph, None));

    let endo = build(&z6, GraphKind::Endo, false, DEFAULT_ENUM_BUDGET)?;
    let g = endo.graph.as_undirected().expect("undirected kind");
    let missing: Vec<_> = (0..6)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    println!("\nEndo(Z6): {} edges, non-edges {missing:?}", g.edge_count());
    println!("maximal cliques: {:?}", maximal_cliques(g, 100)?);
    Ok(())
}

//! Property report (girth, planarity, bipartite, tree, cliques) of Endo(G)
//! for a handful of small groups.
//!
//! `cargo run --example planarity_girth`

use endograph::builders::{analyze, build, GraphKind};
use endograph::group::{make_abelian, make_cyclic, make_quaternion, make_symmetric, AbelianShape};
use endograph::morphism::DEFAULT_ENUM_BUDGET;

fn main() -> endograph::Result<()> {
    let groups = vec![
        make_cyclic(2),
        make_cyclic(3),
        make_cyclic(4),
        make_abelian(&AbelianShape::parse("2x2")?)?,
        make_cyclic(5),
        make_symmetric(3)?,
        make_quaternion(),
        make_symmetric(4)?,
    ];
    println!("{:<9} {:>3} {:>5} {:>8} {:>6} {:>9} {:>5} {:>7}", "group", "n", "edges", "girth", "planar", "bipartite", "tree", "cliques");
    for g in &groups {
        let built = build(g, GraphKind::Endo, false, DEFAULT_ENUM_BUDGET)?;
        let a = analyze(g, &built, 100_000)?;
        println!(
            "{:<9} {:>3} {:>5} {:>8} {:>6} {:>9} {:>5} {:>7}",
            a.group, a.vertices, a.edges, a.girth.to_string(), a.planar, a.bipartite, a.tree, a.maximal_cliques
        );
    }
    Ok(())
}

//! Automorphism graphs: disjoint unions of complete graphs on the orbits.
//!
//! `cargo run --example automorphism_graph`

use endograph::builders::{auto_graph, build, GraphKind};
use endograph::graph::to_dot;
use endograph::group::{catalog_entries, make_cyclic};
use endograph::morphism::{automorphism_orbits, enumerate_automorphisms, DEFAULT_ENUM_BUDGET};

fn main() -> endograph::Result<()> {
    let z6 = make_cyclic(6);
    let auto = build(&z6, GraphKind::Auto, false, DEFAULT_ENUM_BUDGET)?;
    print!("{}", to_dot(&auto.graph, None));

    println!("\n{:<8} {:>5}  orbits", "group", "|Aut|");
    for entry in catalog_entries(12)? {
        let g = entry.build()?;
        let autos = enumerate_automorphisms(&g, DEFAULT_ENUM_BUDGET)?;
        let orbits = automorphism_orbits(&g, DEFAULT_ENUM_BUDGET)?;
        let graph = auto_graph(&g, DEFAULT_ENUM_BUDGET)?;
        assert_eq!(graph.components(), orbits);
        let shown: Vec<String> = orbits
            .iter()
            .filter(|o| o.len() > 1)
            .map(|o| format!("{o:?}"))
            .collect();
        println!("{:<8} {:>5}  {}", g.name(), autos.len(), shown.join(" "));
    }
    Ok(())
}

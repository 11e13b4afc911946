//! Directed power graphs, and where they leave the directed endomorphism graph.
//!
//! `cargo run --example power_graph [-- SELECTOR]`, e.g. `catalog:12.5`.

use endograph::builders::{build, GraphKind};
use endograph::cli::GroupSelector;
use endograph::graph::to_dot;
use endograph::morphism::DEFAULT_ENUM_BUDGET;

fn main() -> endograph::Result<()> {
    let sel: GroupSelector = std::env::args().nth(1).unwrap_or_else(|| "catalog:12.5".into()).parse()?;
    let g = sel.build()?;
    let power = build(&g, GraphKind::PowerDirected, false, DEFAULT_ENUM_BUDGET)?;
    let endo = build(&g, GraphKind::EndoDirected, false, DEFAULT_ENUM_BUDGET)?;
    print!("{}", to_dot(&power.graph, None));
    let (p, e) = (power.graph.as_directed().unwrap(), endo.graph.as_directed().unwrap());
    let outside: Vec<_> = p.arcs().into_iter().filter(|&(a, b)| !e.has_arc(a, b)).collect();
    println!("\n{}: {} power arcs, {} endomorphism arcs", g.name(), p.arc_count(), e.arc_count());
    if outside.is_empty() {
        println!("every power arc is an endomorphism arc");
    } else {
        println!("power arcs no endomorphism realizes: {outside:?}");
    }
    Ok(())
}

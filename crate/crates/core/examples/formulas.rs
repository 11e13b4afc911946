//! Closed-form edge and maximal-clique counts of Endo(Z_n) against the built graphs.
//!
//! `cargo run --example formulas [-- MAX_N]`

use endograph::arith::factorize;
use endograph::builders::{build, clique_count_formula, edge_count_formula, GraphKind};
use endograph::graph::{maximal_cliques, DEFAULT_CLIQUE_LIMIT};
use endograph::group::make_cyclic;
use endograph::morphism::DEFAULT_ENUM_BUDGET;

fn main() -> endograph::Result<()> {
    let max_n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(30);
    println!("{:>4} {:>14} {:>7} {:>7} {:>8} {:>8}", "n", "factors", "edges", "formula", "cliques", "formula");
    for n in 2..=max_n {
        let built = build(&make_cyclic(n as usize), GraphKind::Endo, false, DEFAULT_ENUM_BUDGET)?;
        let g = built.graph.as_undirected().expect("undirected kind");
        let cliques = maximal_cliques(g, DEFAULT_CLIQUE_LIMIT)?.len();
        let factors: Vec<String> = factorize(n).iter().map(|(p, e)| format!("{p}^{e}")).collect();
        let (e, c) = (edge_count_formula(n), clique_count_formula(n)?);
        let flag = if g.edge_count() as u128 == e && cliques as u128 == c { "" } else { "  MISMATCH" };
        println!(
            "{n:>4} {:>14} {:>7} {e:>7} {cliques:>8} {c:>8}{flag}",
            factors.join("."),
            g.edge_count()
        );
    }
    Ok(())
}

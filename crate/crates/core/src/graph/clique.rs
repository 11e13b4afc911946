use super::{bits, full_row, Row, SimpleGraph};
use crate::error::{Error, Result};

/// Default cap on the number of maximal cliques returned.
pub const DEFAULT_CLIQUE_LIMIT: usize = 100_000;

/// All maximal cliques, Bron–Kerbosch with Tomita pivoting.
///
/// Each clique is sorted ascending and the list is sorted lexicographically.
/// Fails with [`Error::CliqueOverflow`] past `limit` cliques.
pub fn maximal_cliques(g: &SimpleGraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<Row> = (0..n).map(|v| g.row(v)).collect();
    let mut out = Vec::new();
    expand(&adj, 0, full_row(n), 0, &mut out, limit)?;
    out.sort();
    Ok(out)
}

fn expand(
    adj: &[Row],
    clique: Row,
    mut candidates: Row,
    mut excluded: Row,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if candidates == 0 {
        if excluded == 0 {
            if out.len() == limit {
                return Err(Error::CliqueOverflow { limit });
            }
            out.push(bits(clique).collect());
        }
        return Ok(());
    }
    let pivot = bits(candidates | excluded)
        .max_by_key(|&u| ((adj[u] & candidates).count_ones(), std::cmp::Reverse(u)))
        .expect("candidates non-empty");
    for v in bits(candidates & !adj[pivot]) {
        expand(
            adj,
            clique | 1 << v,
            candidates & adj[v],
            excluded & adj[v],
            out,
            limit,
        )?;
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
    Ok(())
}

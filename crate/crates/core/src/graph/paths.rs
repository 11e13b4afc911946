use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{bits, full_row, Digraph, Row, SimpleGraph};
use crate::error::{Error, Result};

/// Hamiltonicity is only decided up to this many vertices.
pub const HAMILTONIAN_VERTEX_LIMIT: usize = 32;

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(k) => s.serialize_u64(*k as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Breadth-first search from every vertex; a non-tree edge `(u, w)` met
/// from root `r` closes a closed walk of length `d(u) + d(w) + 1`, and the
/// minimum over all roots is the girth.
pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Two-colouring by breadth-first search (graphs without edges count as bipartite).
pub fn is_bipartite(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    stack.push(w);
                } else if colour[w] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Connected with exactly `n - 1` edges; the empty graph is not a tree.
pub fn is_tree(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    n >= 1 && g.edge_count() == n - 1 && g.is_connected()
}

/// Whether the digraph has a directed cycle through all vertices.
///
/// A single vertex has no cycle; two vertices need both arcs. Decided by
/// backtracking from vertex 0, pruning branches where some unvisited vertex
/// has lost all possible predecessors or successors.
pub fn has_hamiltonian_cycle(d: &Digraph) -> Result<bool> {
    let n = d.vertex_count();
    if n > HAMILTONIAN_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge {
            operation: "Hamiltonian cycle search",
            vertices: n,
            limit: HAMILTONIAN_VERTEX_LIMIT,
        });
    }
    if n < 2 {
        return Ok(false);
    }
    let out: Vec<Row> = (0..n).map(|v| d.out_row(v)).collect();
    let inn = d.in_rows();
    if (0..n).any(|v| out[v] == 0 || inn[v] == 0) {
        return Ok(false);
    }
    let mut search = PathSearch {
        out,
        inn,
        all: full_row(n),
        dead: HashSet::new(),
    };
    Ok(search.extend(0, 1))
}

struct PathSearch {
    out: Vec<Row>,
    inn: Vec<Row>,
    all: Row,
    // (visited, last) states already known not to close into a cycle
    dead: HashSet<(Row, usize)>,
}

impl PathSearch {
    fn extend(&mut self, last: usize, visited: Row) -> bool {
        if visited == self.all {
            return self.out[last] & 1 == 1;
        }
        if self.dead.contains(&(visited, last)) {
            return false;
        }
        let unvisited = self.all & !visited;
        // each unvisited vertex still needs a predecessor among {last} + unvisited
        // and a successor among {0} + unvisited
        let feasible = bits(unvisited).all(|v| {
            self.inn[v] & (unvisited | 1 << last) != 0 && self.out[v] & (unvisited | 1) != 0
        }) && spread(&self.out, 1 << last, unvisited) & unvisited == unvisited
            && spread(&self.inn, 1, unvisited) & unvisited == unvisited;
        if feasible {
            for next in bits(self.out[last] & unvisited) {
                if self.extend(next, visited | 1 << next) {
                    return true;
                }
            }
        }
        self.dead.insert((visited, last));
        false
    }
}

/// Vertices reachable from `start` through `within`.
fn spread(rows: &[Row], start: Row, within: Row) -> Row {
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= rows[v];
        }
        frontier = next & within & !seen;
        seen |= frontier;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&SimpleGraph::cycle(3).unwrap()), Girth::Finite(3));
        assert_eq!(girth(&SimpleGraph::cycle(5).unwrap()), Girth::Finite(5));
        assert_eq!(girth(&SimpleGraph::path(2).unwrap()), Girth::Infinite);
        assert_eq!(girth(&SimpleGraph::complete_bipartite(3, 3).unwrap()), Girth::Finite(4));
        assert_eq!(girth(&SimpleGraph::new(0).unwrap()), Girth::Infinite);
        // two disjoint cycles
        let g = SimpleGraph::from_edges(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)],
        )
        .unwrap();
        assert_eq!(girth(&g), Girth::Finite(4));
    }

    #[test]
    fn bipartite_and_tree() {
        let edge = SimpleGraph::path(2).unwrap();
        assert!(is_bipartite(&edge) && is_tree(&edge));
        let tri = SimpleGraph::cycle(3).unwrap();
        assert!(!is_bipartite(&tri) && !is_tree(&tri));
        let star = SimpleGraph::complete_bipartite(1, 3).unwrap();
        assert!(is_bipartite(&star) && is_tree(&star));
        assert!(is_tree(&SimpleGraph::new(1).unwrap()));
        assert!(!is_tree(&SimpleGraph::new(0).unwrap()));
        assert!(!is_tree(&SimpleGraph::new(2).unwrap()));
    }

    #[test]
    fn hamiltonian_examples() {
        let k3 = Digraph::complete(3).unwrap();
        assert!(has_hamiltonian_cycle(&k3).unwrap());
        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(has_hamiltonian_cycle(&c4).unwrap());
        let rev = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!has_hamiltonian_cycle(&rev).unwrap());
        assert!(!has_hamiltonian_cycle(&Digraph::new(1).unwrap()).unwrap());
        assert!(has_hamiltonian_cycle(&Digraph::complete(2).unwrap()).unwrap());
        assert!(has_hamiltonian_cycle(&Digraph::complete(32).unwrap()).unwrap());
        assert!(has_hamiltonian_cycle(&Digraph::complete(33).unwrap()).is_err());
    }
}

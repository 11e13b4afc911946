use std::collections::BTreeMap;

use super::{bits, Digraph, Row, SimpleGraph};
use crate::error::{Error, Result};

/// Isomorphism tests are limited to this many vertices.
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 32;

pub fn graphs_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool> {
    digraphs_isomorphic(&g1.to_digraph(), &g2.to_digraph())
}

pub fn digraphs_isomorphic(d1: &Digraph, d2: &Digraph) -> Result<bool> {
    Ok(find_digraph_isomorphism(d1, d2)?.is_some())
}

/// A vertex bijection `d1 -> d2` preserving arcs in both directions.
///
/// Colours are refined on both graphs together, starting from
/// `(out-degree, in-degree)` and splitting by the multisets of out- and
/// in-neighbour colours until stable. The backtracking search then only
/// pairs vertices of equal colour.
pub fn find_digraph_isomorphism(d1: &Digraph, d2: &Digraph) -> Result<Option<Vec<usize>>> {
    let n = d1.vertex_count();
    for d in [d1, d2] {
        if d.vertex_count() > ISOMORPHISM_VERTEX_LIMIT {
            return Err(Error::GraphTooLarge {
                operation: "isomorphism test",
                vertices: d.vertex_count(),
                limit: ISOMORPHISM_VERTEX_LIMIT,
            });
        }
    }
    if n != d2.vertex_count() || d1.arc_count() != d2.arc_count() {
        return Ok(None);
    }
    let (c1, c2) = refine(d1, d2);
    let histogram = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    let h1 = histogram(&c1);
    if h1 != histogram(&c2) {
        return Ok(None);
    }
    let order = search_order(d1, &c1, &h1);
    let mut search = Search {
        d1,
        d2,
        c1: &c1,
        c2: &c2,
        order: &order,
        map: vec![usize::MAX; n],
        used: 0,
    };
    Ok(search.run(0).then_some(search.map))
}

fn refine(d1: &Digraph, d2: &Digraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [d1, d2];
    let in_rows = [d1.in_rows(), d2.in_rows()];
    let mut colours: [Vec<usize>; 2] = [0, 1].map(|k| {
        let d = graphs[k];
        (0..d.vertex_count())
            .map(|v| d.out_degree(v) * (ISOMORPHISM_VERTEX_LIMIT + 1) + in_rows[k][v].count_ones() as usize)
            .collect()
    });
    let mut classes = count_classes(&colours);
    loop {
        let mut keys: [Vec<(usize, Vec<usize>, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
        for k in 0..2 {
            let d = graphs[k];
            keys[k] = (0..d.vertex_count())
                .map(|v| {
                    let mut outs: Vec<usize> = bits(d.out_row(v)).map(|w| colours[k][w]).collect();
                    let mut ins: Vec<usize> = bits(in_rows[k][v]).map(|w| colours[k][w]).collect();
                    outs.sort_unstable();
                    ins.sort_unstable();
                    (colours[k][v], outs, ins)
                })
                .collect();
        }
        let ids: BTreeMap<&(usize, Vec<usize>, Vec<usize>), usize> = keys
            .iter()
            .flatten()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, key)| (key, i))
            .collect();
        let next: [Vec<usize>; 2] = [0, 1].map(|k| keys[k].iter().map(|key| ids[key]).collect());
        let next_classes = count_classes(&next);
        colours = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let [a, b] = colours;
    (a, b)
}

fn count_classes(colours: &[Vec<usize>; 2]) -> usize {
    colours
        .iter()
        .flatten()
        .collect::<std::collections::BTreeSet<_>>()
        .len()
}

/// Vertices of `d1` ordered so each one is as connected as possible to the
/// ones before it, preferring small colour classes.
fn search_order(d1: &Digraph, colours: &[usize], histogram: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = d1.vertex_count();
    let in_rows = d1.in_rows();
    let mut chosen: Row = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| chosen >> v & 1 == 0)
            .max_by_key(|&v| {
                let links = ((d1.out_row(v) | in_rows[v]) & chosen).count_ones();
                (links, std::cmp::Reverse(histogram[&colours[v]]), std::cmp::Reverse(v))
            })
            .expect("unchosen vertex");
        chosen |= 1 << next;
        order.push(next);
    }
    order
}

struct Search<'a> {
    d1: &'a Digraph,
    d2: &'a Digraph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Row,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.d2.vertex_count() {
            if self.used >> w & 1 == 1 || self.c2[w] != self.c1[v] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let fu = self.map[u];
                self.d1.has_arc(v, u) == self.d2.has_arc(w, fu)
                    && self.d1.has_arc(u, v) == self.d2.has_arc(fu, w)
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            if self.run(depth + 1) {
                return true;
            }
            self.used &= !(1 << w);
            self.map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_examples() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert!(graphs_isomorphic(&k4, &k4).unwrap());
        let path = SimpleGraph::path(4).unwrap();
        let star = SimpleGraph::complete_bipartite(1, 3).unwrap();
        assert!(!graphs_isomorphic(&path, &star).unwrap());
        // C6 vs two triangles: same degrees, different structure
        let c6 = SimpleGraph::cycle(6).unwrap();
        let two = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!graphs_isomorphic(&c6, &two).unwrap());
        let relabeled = SimpleGraph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert!(graphs_isomorphic(&c6, &relabeled).unwrap());
    }

    #[test]
    fn direction_matters() {
        let a = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let b = Digraph::from_arcs(3, [(0, 1), (2, 1)]).unwrap();
        assert!(!digraphs_isomorphic(&a, &b).unwrap());
        let c = Digraph::from_arcs(3, [(2, 0), (0, 1)]).unwrap();
        let map = find_digraph_isomorphism(&a, &c).unwrap().unwrap();
        for (x, y) in a.arcs() {
            assert!(c.has_arc(map[x], map[y]));
        }
        assert!(digraphs_isomorphic(&Digraph::new(40).unwrap(), &Digraph::new(40).unwrap()).is_err());
    }
}

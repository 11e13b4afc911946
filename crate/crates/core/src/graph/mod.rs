//! Directed and undirected graphs on at most 128 vertices, stored as
//! bitset adjacency rows, with the algorithms the checks rely on.

mod clique;
mod io;
mod iso;
mod paths;
mod planar;
mod scc;

use crate::error::{Error, Result};

pub use clique::{maximal_cliques, DEFAULT_CLIQUE_LIMIT};
pub use io::{from_json, to_dot, AnyGraph, GraphJson};
pub use iso::{digraphs_isomorphic, find_digraph_isomorphism, graphs_isomorphic, ISOMORPHISM_VERTEX_LIMIT};
pub use paths::{girth, has_hamiltonian_cycle, is_bipartite, is_tree, Girth, HAMILTONIAN_VERTEX_LIMIT};
pub use planar::is_planar;
pub use scc::{
    condensation, has_single_point_basis, is_strongly_connected, minimum_point_basis, reachable,
    strongly_connected_components,
};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 128;

pub(crate) type Row = u128;

pub(crate) fn bits(mut row: Row) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if row == 0 {
            None
        } else {
            let i = row.trailing_zeros() as usize;
            row &= row - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_row(n: usize) -> Row {
    if n == MAX_VERTICES {
        Row::MAX
    } else {
        (1 << n) - 1
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            operation: "graph construction",
            vertices: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

fn check_pair(n: usize, a: usize, b: usize) -> Result<()> {
    for v in [a, b] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, vertices: n });
        }
    }
    if a == b {
        return Err(Error::Unsupported(format!("self-loop at vertex {a}")));
    }
    Ok(())
}

/// Removes bit `v` and shifts higher bits down by one.
fn drop_bit(row: Row, v: usize) -> Row {
    let low = row & ((1 << v) - 1);
    let high = if v + 1 >= 128 { 0 } else { (row >> (v + 1)) << v };
    low | high
}

/// A loop-free directed graph. Vertex labels record which group element
/// each vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Row>,
    labels: Vec<usize>,
}

impl Digraph {
    pub fn new(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            out: vec![0; n],
            labels: (0..n).collect(),
        })
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut d = Self::new(n)?;
        for (a, b) in arcs {
            d.add_arc(a, b)?;
        }
        Ok(d)
    }

    /// Complete digraph: every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Result<Self> {
        let mut d = Self::new(n)?;
        for (v, row) in d.out.iter_mut().enumerate() {
            *row = full_row(n) & !(1 << v);
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, a: usize, b: usize) -> Result<()> {
        check_pair(self.out.len(), a, b)?;
        self.out[a] |= 1 << b;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.out.len() {
            return Err(Error::LengthMismatch {
                expected: self.out.len(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a] >> b & 1 == 1
    }

    pub(crate) fn out_row(&self, v: usize) -> Row {
        self.out[v]
    }

    pub(crate) fn in_rows(&self) -> Vec<Row> {
        let mut rows = vec![0; self.out.len()];
        for (a, &row) in self.out.iter().enumerate() {
            for b in bits(row) {
                rows[b] |= 1 << a;
            }
        }
        rows
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.out[v])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|&&r| r >> v & 1 == 1).count()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(a, &row)| bits(row).map(move |b| (a, b)))
            .collect()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Vertex currently carrying `label`.
    pub fn vertex_with_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Induced subgraph without `v`; later vertices shift down by one and keep
    /// their labels.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.out.len() {
            return Err(Error::VertexOutOfRange { vertex: v, vertices: self.out.len() });
        }
        let mut out = self.out.clone();
        out.remove(v);
        let mut labels = self.labels.clone();
        labels.remove(v);
        Ok(Self {
            out: out.into_iter().map(|r| drop_bit(r, v)).collect(),
            labels,
        })
    }

    /// Arc relation as an edge set: `{a, b}` whenever `a -> b` or `b -> a`.
    pub fn underlying_simple_graph(&self) -> SimpleGraph {
        let mut adj = self.out.clone();
        for (a, &row) in self.out.iter().enumerate() {
            for b in bits(row) {
                adj[b] |= 1 << a;
            }
        }
        SimpleGraph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Every ordered pair of distinct vertices is an arc.
    pub fn is_complete_digraph(&self) -> bool {
        let n = self.out.len();
        self.out
            .iter()
            .enumerate()
            .all(|(v, &row)| row == full_row(n) & !(1 << v))
    }

    /// Whether every arc of `self` is an arc of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.out.len() == other.out.len()
            && self.out.iter().zip(&other.out).all(|(a, b)| a & !b == 0)
    }
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Row>,
    labels: Vec<usize>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            adj: vec![0; n],
            labels: (0..n).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Digraph::complete(n)?.underlying_simple_graph())
    }

    /// Complete bipartite graph with parts `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        Self::from_edges(
            p + q,
            (0..p).flat_map(|a| (p..p + q).map(move |b| (a, b))),
        )
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        check_pair(self.adj.len(), a, b)?;
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.adj.len() {
            return Err(Error::LengthMismatch {
                expected: self.adj.len(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> Row {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(a, b)` with `a < b`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, &row)| bits(row >> a).map(move |d| (a, a + d)))
            .collect()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn vertex_with_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.adj.len() {
            return Err(Error::VertexOutOfRange { vertex: v, vertices: self.adj.len() });
        }
        let mut adj = self.adj.clone();
        adj.remove(v);
        let mut labels = self.labels.clone();
        labels.remove(v);
        Ok(Self {
            adj: adj.into_iter().map(|r| drop_bit(r, v)).collect(),
            labels,
        })
    }

    /// Both orientations of every edge.
    pub fn to_digraph(&self) -> Digraph {
        Digraph {
            out: self.adj.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.to_digraph().is_complete_digraph()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen: Row = 0;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp: Row = 1 << s;
            let mut frontier: Row = 1 << s;
            while frontier != 0 {
                let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by the vertex set `keep` (sorted), labels preserved.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph {
            adj: vec![0; keep.len()],
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
        };
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.has_edge(a, b) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.adj.len() == other.adj.len()
            && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }
}

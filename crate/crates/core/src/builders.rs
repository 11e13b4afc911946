//! The graphs defined on a group: directed and undirected endomorphism
//! graphs, the automorphism graph and directed and undirected power graphs,
//! each optionally without the identity vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{binomial, divisor_profile, factorize};
use crate::error::{Error, Result};
use crate::graph::{
    girth, has_hamiltonian_cycle, has_single_point_basis, is_bipartite, is_planar,
    is_strongly_connected, is_tree, maximal_cliques, minimum_point_basis, AnyGraph, Digraph, Girth,
    SimpleGraph, HAMILTONIAN_VERTEX_LIMIT,
};
use crate::group::{AbelianShape, Group, IDENTITY};
use crate::morphism::{enumerate_automorphisms, ArcOracle, ArcStrategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    /// Arc `a -> b` when some endomorphism maps `a` to `b`.
    EndoDirected,
    /// Underlying simple graph of [`GraphKind::EndoDirected`].
    Endo,
    /// Edge `{a, b}` when some automorphism maps `a` to `b`.
    Auto,
    /// Arc `x -> y` when `y = x^m` for some `m >= 1`.
    PowerDirected,
    /// Underlying simple graph of [`GraphKind::PowerDirected`].
    Power,
}

impl GraphKind {
    pub const ALL: [GraphKind; 5] = [
        GraphKind::EndoDirected,
        GraphKind::Endo,
        GraphKind::Auto,
        GraphKind::PowerDirected,
        GraphKind::Power,
    ];

    pub fn is_directed(self) -> bool {
        matches!(self, GraphKind::EndoDirected | GraphKind::PowerDirected)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::EndoDirected => "endo-directed",
            GraphKind::Endo => "endo",
            GraphKind::Auto => "auto",
            GraphKind::PowerDirected => "power-directed",
            GraphKind::Power => "power",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown graph kind {s:?}")))
    }
}

/// A built graph and the arc strategy used for it, when morphisms were involved.
#[derive(Debug, Clone)]
pub struct BuiltGraph {
    pub kind: GraphKind,
    pub delete_identity: bool,
    pub graph: AnyGraph,
    pub strategy: Option<ArcStrategy>,
}

/// Builds one graph of `g`. Vertex `i` is element `i`; with
/// `delete_identity` the identity is removed and later vertices shift down,
/// keeping element labels.
pub fn build(g: &Group, kind: GraphKind, delete_identity: bool, budget: u128) -> Result<BuiltGraph> {
    let (graph, strategy) = match kind {
        GraphKind::EndoDirected | GraphKind::Endo => {
            let oracle = ArcOracle::new(g, budget)?;
            let d = endo_digraph(&oracle)?;
            let graph = if kind == GraphKind::Endo {
                AnyGraph::Undirected(d.underlying_simple_graph())
            } else {
                AnyGraph::Directed(d)
            };
            (graph, Some(oracle.strategy()))
        }
        GraphKind::Auto => (AnyGraph::Undirected(auto_graph(g, budget)?), Some(ArcStrategy::Enumeration)),
        GraphKind::PowerDirected => (AnyGraph::Directed(power_digraph(g)?), None),
        GraphKind::Power => (AnyGraph::Undirected(power_digraph(g)?.underlying_simple_graph()), None),
    };
    let graph = if delete_identity {
        match graph {
            AnyGraph::Directed(d) => AnyGraph::Directed(d.delete_vertex(IDENTITY)?),
            AnyGraph::Undirected(s) => AnyGraph::Undirected(s.delete_vertex(IDENTITY)?),
        }
    } else {
        graph
    };
    Ok(BuiltGraph {
        kind,
        delete_identity,
        graph,
        strategy,
    })
}

/// Structural summary of one built graph. Point-basis and strong
/// connectivity are only reported for directed kinds; Hamiltonicity only up
/// to the backtracking vertex limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Analysis {
    pub group: String,
    pub kind: GraphKind,
    pub delete_identity: bool,
    pub strategy: Option<ArcStrategy>,
    pub vertices: usize,
    pub edges: usize,
    pub arcs: Option<usize>,
    pub complete: bool,
    pub connected: bool,
    pub girth: Girth,
    pub planar: bool,
    pub bipartite: bool,
    pub tree: bool,
    pub maximal_cliques: usize,
    pub hamiltonian: Option<bool>,
    pub single_point_basis: Option<bool>,
    pub point_basis: Option<Vec<usize>>,
    pub strongly_connected: Option<bool>,
}

impl Analysis {
    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        fn opt<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "n/a".to_string(), ToString::to_string)
        }
        let mut lines = vec![
            format!("group: {}", self.group),
            format!("kind: {}", self.kind),
            format!("delete_identity: {}", self.delete_identity),
            format!("strategy: {}", opt(&self.strategy)),
            format!("vertices: {}", self.vertices),
            format!("edges: {}", self.edges),
        ];
        if let Some(a) = self.arcs {
            lines.push(format!("arcs: {a}"));
        }
        lines.extend([
            format!("complete: {}", self.complete),
            format!("connected: {}", self.connected),
            format!("girth: {}", self.girth),
            format!("planar: {}", self.planar),
            format!("bipartite: {}", self.bipartite),
            format!("tree: {}", self.tree),
            format!("maximal_cliques: {}", self.maximal_cliques),
            format!("hamiltonian: {}", opt(&self.hamiltonian)),
        ]);
        if self.kind.is_directed() {
            lines.push(format!("single_point_basis: {}", opt(&self.single_point_basis)));
            lines.push(format!(
                "point_basis: {}",
                self.point_basis.as_ref().map_or("n/a".into(), |b| format!("{b:?}"))
            ));
            lines.push(format!("strongly_connected: {}", opt(&self.strongly_connected)));
        }
        lines.join("\n") + "\n"
    }
}

/// Computes every property in [`Analysis`]. Vertices are reported by
/// element label.
pub fn analyze(g: &Group, built: &BuiltGraph, clique_limit: usize) -> Result<Analysis> {
    let simple = built.graph.simple();
    let directed = built.graph.as_directed();
    let n = built.graph.vertex_count();
    let hamiltonian = if n <= HAMILTONIAN_VERTEX_LIMIT {
        let d = directed.cloned().unwrap_or_else(|| simple.to_digraph());
        Some(has_hamiltonian_cycle(&d)?)
    } else {
        None
    };
    let labels = built.graph.labels();
    Ok(Analysis {
        group: g.name().to_string(),
        kind: built.kind,
        delete_identity: built.delete_identity,
        strategy: built.strategy,
        vertices: n,
        edges: simple.edge_count(),
        arcs: directed.map(Digraph::arc_count),
        complete: simple.is_complete(),
        connected: simple.is_connected(),
        girth: girth(&simple),
        planar: is_planar(&simple),
        bipartite: is_bipartite(&simple),
        tree: is_tree(&simple),
        maximal_cliques: maximal_cliques(&simple, clique_limit)?.len(),
        hamiltonian,
        single_point_basis: directed.map(has_single_point_basis),
        point_basis: directed.map(|d| minimum_point_basis(d).iter().map(|&v| labels[v]).collect()),
        strongly_connected: directed.map(is_strongly_connected),
    })
}

/// Directed endomorphism graph from any arc oracle.
pub fn endo_digraph(oracle: &ArcOracle<'_>) -> Result<Digraph> {
    let g = oracle.group();
    let mut d = Digraph::new(g.order())?;
    for a in g.elements() {
        for b in g.elements() {
            if a != b && oracle.arc(a, b)? {
                d.add_arc(a, b)?;
            }
        }
    }
    Ok(d)
}

/// Automorphism graph: `{a, b}` is an edge when some automorphism sends `a` to `b`.
pub fn auto_graph(g: &Group, budget: u128) -> Result<SimpleGraph> {
    let autos = enumerate_automorphisms(g, budget)?;
    let mut s = SimpleGraph::new(g.order())?;
    for f in &autos {
        for x in g.elements() {
            let y = f.apply(x);
            if x != y {
                s.add_edge(x, y)?;
            }
        }
    }
    Ok(s)
}

/// Directed power graph: `x -> y` for `y = x^m`, `m >= 1`, `y != x`.
pub fn power_digraph(g: &Group) -> Result<Digraph> {
    let mut d = Digraph::new(g.order())?;
    for x in g.elements() {
        let mut y = x;
        for _ in 1..g.elem_order(x) {
            y = g.op(y, x);
            if y != x {
                d.add_arc(x, y)?;
            }
        }
        if x != IDENTITY {
            d.add_arc(x, IDENTITY)?;
        }
    }
    Ok(d)
}

/// Edge count of the endomorphism graph of `Z_n`: all pairs minus pairs of
/// elements whose orders are incomparable divisors of `n`.
pub fn edge_count_formula(n: u64) -> u128 {
    let profile = divisor_profile(n);
    let mut missing: u128 = 0;
    for (i, (&di, &pi)) in profile.divisors.iter().zip(&profile.phi_values).enumerate() {
        for (&dj, &pj) in profile.divisors[i + 1..].iter().zip(&profile.phi_values[i + 1..]) {
            if dj % di != 0 {
                missing += pi as u128 * pj as u128;
            }
        }
    }
    binomial(n, 2) - missing
}

/// Maximal clique count of the endomorphism graph of `Z_n`: the multinomial
/// coefficient of the prime exponents of `n`.
pub fn clique_count_formula(n: u64) -> Result<u128> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "clique count formula needs n >= 2, got {n}"
        )));
    }
    let mut total = 0u64;
    let mut value = 1u128;
    for (_, e) in factorize(n) {
        total += e as u64;
        value *= binomial(total, e as u64);
    }
    Ok(value)
}

/// `(Z_{p^a})^m x (Z_{p^{a+1}})^n`: one prime, at most two exponents, and
/// those consecutive. The trivial group qualifies.
pub fn is_completeness_shape(shape: &AbelianShape) -> bool {
    let f = shape.factors();
    match f {
        [] | [_] => true,
        [hi, lo] => hi.prime == lo.prime && hi.exponent == lo.exponent + 1,
        _ => false,
    }
}

/// Every prime occurs with a single exponent.
pub fn is_per_prime_homocyclic(shape: &AbelianShape) -> bool {
    shape
        .factors()
        .windows(2)
        .all(|w| w[0].prime != w[1].prime)
}

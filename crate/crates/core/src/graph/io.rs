use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Digraph, SimpleGraph};
use crate::error::{Error, Result};

/// Either kind of graph, as produced by the builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Directed(Digraph),
    Undirected(SimpleGraph),
}

impl AnyGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Directed(d) => d.vertex_count(),
            AnyGraph::Undirected(g) => g.vertex_count(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }

    pub fn labels(&self) -> &[usize] {
        match self {
            AnyGraph::Directed(d) => d.labels(),
            AnyGraph::Undirected(g) => g.labels(),
        }
    }

    /// Arcs for digraphs, `a < b` edges for undirected graphs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match self {
            AnyGraph::Directed(d) => d.arcs(),
            AnyGraph::Undirected(g) => g.edges(),
        }
    }

    /// The underlying simple graph (a clone for undirected graphs).
    pub fn simple(&self) -> SimpleGraph {
        match self {
            AnyGraph::Directed(d) => d.underlying_simple_graph(),
            AnyGraph::Undirected(g) => g.clone(),
        }
    }

    pub fn as_directed(&self) -> Option<&Digraph> {
        match self {
            AnyGraph::Directed(d) => Some(d),
            AnyGraph::Undirected(_) => None,
        }
    }

    pub fn as_undirected(&self) -> Option<&SimpleGraph> {
        match self {
            AnyGraph::Directed(_) => None,
            AnyGraph::Undirected(g) => Some(g),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        let labels = self.labels();
        let identity = labels.iter().enumerate().all(|(i, &l)| i == l);
        GraphJson {
            vertices: self.vertex_count(),
            directed: self.is_directed(),
            arcs: self.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
            labels: (!identity).then(|| labels.to_vec()),
        }
    }
}

/// Serialized graph: `{"vertices": n, "directed": bool, "arcs": [[a, b], ..]}`,
/// plus the element labels when they differ from `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub directed: bool,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<AnyGraph> {
        let pairs = self.arcs.iter().map(|&[a, b]| (a, b));
        let labels = self.labels.unwrap_or_else(|| (0..self.vertices).collect());
        Ok(if self.directed {
            AnyGraph::Directed(Digraph::from_arcs(self.vertices, pairs)?.with_labels(labels)?)
        } else {
            AnyGraph::Undirected(SimpleGraph::from_edges(self.vertices, pairs)?.with_labels(labels)?)
        })
    }
}

pub fn from_json(text: &str) -> Result<AnyGraph> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
    parsed.into_graph()
}

/// Graphviz source. Vertices are named by their labels (group element
/// indices); `display` may attach a `label` attribute to each.
pub fn to_dot(g: &AnyGraph, display: Option<&dyn Fn(usize) -> String>) -> String {
    let (keyword, connector) = if g.is_directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let labels = g.labels();
    let mut out = format!("{keyword} {{\n");
    for &l in labels {
        match display {
            Some(f) => writeln!(out, "  {l} [label=\"{}\"];", f(l).replace('"', "\\\"")),
            None => writeln!(out, "  {l};"),
        }
        .expect("write to String");
    }
    for (a, b) in g.pairs() {
        writeln!(out, "  {} {connector} {};", labels[a], labels[b]).expect("write to String");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_shapes() {
        let d = AnyGraph::Directed(Digraph::from_arcs(2, [(1, 0)]).unwrap());
        assert_eq!(to_dot(&d, None), "digraph {\n  0;\n  1;\n  1 -> 0;\n}\n");
        let g = AnyGraph::Undirected(
            SimpleGraph::from_edges(3, [(0, 2)])
                .unwrap()
                .delete_vertex(1)
                .unwrap(),
        );
        assert_eq!(to_dot(&g, None), "graph {\n  0;\n  2;\n  0 -- 2;\n}\n");
        let named = to_dot(&g, Some(&|l| format!("({l})")));
        assert!(named.contains("2 [label=\"(2)\"];"));
    }

    #[test]
    fn json_round_trip() {
        let g = AnyGraph::Undirected(
            SimpleGraph::complete(4).unwrap().delete_vertex(0).unwrap(),
        );
        let text = serde_json::to_string(&g.to_json()).unwrap();
        assert!(text.starts_with(r#"{"vertices":3,"directed":false,"arcs":[[0,1],[0,2],[1,2]]"#));
        assert_eq!(from_json(&text).unwrap(), g);
        let d = AnyGraph::Directed(Digraph::from_arcs(3, [(2, 0), (0, 1)]).unwrap());
        let text = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(text, r#"{"vertices":3,"directed":true,"arcs":[[0,1],[2,0]]}"#);
        assert_eq!(from_json(&text).unwrap(), d);
        assert!(from_json(r#"{"vertices":2,"directed":true,"arcs":[[0,0]]}"#).is_err());
        assert!(from_json("nope").is_err());
    }
}

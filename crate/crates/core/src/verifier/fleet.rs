use std::sync::OnceLock;

use crate::builders::endo_digraph;
use crate::error::Result;
use crate::graph::Digraph;
use crate::group::{catalog_entries, make_abelian, make_cyclic, AbelianShape, Group};
use crate::morphism::{ArcOracle, ArcStrategy};

/// A fleet member with its lazily computed directed endomorphism graph.
pub struct Subject {
    pub selector: String,
    pub group: Group,
    pub shape: Option<AbelianShape>,
    fast_only: bool,
    endo: OnceLock<Result<(Digraph, ArcStrategy)>>,
}

impl Subject {
    pub fn new(selector: impl Into<String>, group: Group) -> Self {
        let shape = group.abelian_shape();
        Self {
            selector: selector.into(),
            group,
            shape,
            fast_only: false,
            endo: OnceLock::new(),
        }
    }

    /// Skips enumeration and answers arcs with the abelian fast path.
    pub fn fast_only(mut self) -> Self {
        self.fast_only = true;
        self
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Directed endomorphism graph and the strategy that produced it.
    pub fn endo(&self, budget: u128) -> Result<&(Digraph, ArcStrategy)> {
        self.endo
            .get_or_init(|| {
                let oracle = if self.fast_only {
                    ArcOracle::with_strategy(&self.group, ArcStrategy::AbelianFastPath, budget)?
                } else {
                    ArcOracle::new(&self.group, budget)?
                };
                Ok((endo_digraph(&oracle)?, oracle.strategy()))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn endo_digraph(&self, budget: u128) -> Result<&Digraph> {
        self.endo(budget).map(|(d, _)| d)
    }
}

pub(crate) fn catalog_fleet(max_order: usize) -> Result<Vec<Subject>> {
    catalog_entries(max_order)?
        .iter()
        .map(|e| Ok(Subject::new(e.selector(), e.build()?)))
        .collect()
}

/// Abelian shapes up to `max_order`; those above `enumeration_max` use the fast path.
pub(crate) fn abelian_fleet(max_order: u64, enumeration_max: u64) -> Result<Vec<Subject>> {
    AbelianShape::all_up_to(max_order)
        .into_iter()
        .map(|shape| {
            let s = Subject::new(format!("abelian:{}", shape.selector()), make_abelian(&shape)?);
            Ok(if shape.order() > enumeration_max { s.fast_only() } else { s })
        })
        .collect()
}

pub(crate) fn cyclic_fleet(max_n: u64) -> Vec<Subject> {
    (1..=max_n as usize)
        .map(|n| Subject::new(format!("cyclic:{n}"), make_cyclic(n)))
        .collect()
}

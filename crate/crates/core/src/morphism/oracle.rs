use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::{enumerate_endomorphisms, exists_with_generators, EndoMonoid};
use crate::error::{Error, Result};
use crate::group::{greedy_generating_set, CyclicPresentation, ElementId, Group, IDENTITY};

use super::fast::cyclic_product_arc;

/// How arc queries for one group are answered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcStrategy {
    /// Full endomorphism enumeration with a materialized arc matrix.
    Enumeration,
    /// Closed-form test on cyclic-factor coordinates (abelian groups only).
    AbelianFastPath,
    /// Backtracking per pair with the image of the source pinned; memoized.
    ConstrainedSearch,
}

impl fmt::Display for ArcStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Enumeration => "enumeration",
            Self::AbelianFastPath => "abelian-fast-path",
            Self::ConstrainedSearch => "constrained-search",
        })
    }
}

/// Answers "does some endomorphism map `a` to `b`" for one group.
///
/// Lazily filled memo tables sit behind mutexes, so an oracle can be shared
/// between threads.
pub struct ArcOracle<'g> {
    group: &'g Group,
    strategy: ArcStrategy,
    budget: u128,
    monoid: Option<EndoMonoid>,
    presentation: Option<CyclicPresentation>,
    memo: Mutex<HashMap<(ElementId, ElementId), bool>>,
    generators: Mutex<HashMap<ElementId, Vec<ElementId>>>,
}

impl<'g> ArcOracle<'g> {
    /// Picks full enumeration when it fits in `budget`, else the abelian fast
    /// path, else per-pair constrained search.
    pub fn new(group: &'g Group, budget: u128) -> Result<Self> {
        match Self::with_strategy(group, ArcStrategy::Enumeration, budget) {
            Err(Error::BudgetExceeded { .. }) if group.is_abelian() => {
                Self::with_strategy(group, ArcStrategy::AbelianFastPath, budget)
            }
            Err(Error::BudgetExceeded { .. }) => {
                Self::with_strategy(group, ArcStrategy::ConstrainedSearch, budget)
            }
            other => other,
        }
    }

    pub fn with_strategy(group: &'g Group, strategy: ArcStrategy, budget: u128) -> Result<Self> {
        let mut oracle = Self {
            group,
            strategy,
            budget,
            monoid: None,
            presentation: None,
            memo: Mutex::new(HashMap::new()),
            generators: Mutex::new(HashMap::new()),
        };
        match strategy {
            ArcStrategy::Enumeration => {
                oracle.monoid = Some(enumerate_endomorphisms(group, budget)?);
            }
            ArcStrategy::AbelianFastPath => {
                if !group.is_abelian() {
                    return Err(Error::NotAbelian);
                }
                oracle.presentation = Some(group.cyclic_presentation().ok_or_else(|| {
                    Error::Unsupported("no cyclic-factor presentation found".into())
                })?);
            }
            ArcStrategy::ConstrainedSearch => {}
        }
        Ok(oracle)
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn strategy(&self) -> ArcStrategy {
        self.strategy
    }

    /// The enumerated monoid, when the strategy is [`ArcStrategy::Enumeration`].
    pub fn monoid(&self) -> Option<&EndoMonoid> {
        self.monoid.as_ref()
    }

    pub fn arc(&self, a: ElementId, b: ElementId) -> Result<bool> {
        let n = self.group.order();
        for x in [a, b] {
            if x >= n {
                return Err(Error::ElementOutOfRange { element: x, order: n });
            }
        }
        if let Some(m) = &self.monoid {
            return Ok(m.arc(a, b));
        }
        if let Some(p) = &self.presentation {
            return Ok(cyclic_product_arc(p.moduli(), p.coords(a), p.coords(b)));
        }
        if a == b || b == IDENTITY {
            return Ok(true);
        }
        if a == IDENTITY || self.group.elem_order(a) % self.group.elem_order(b) != 0 {
            return Ok(false);
        }
        if let Some(&known) = self.memo.lock().expect("memo lock").get(&(a, b)) {
            return Ok(known);
        }
        let gens = {
            let mut cache = self.generators.lock().expect("generator lock");
            cache
                .entry(a)
                .or_insert_with(|| greedy_generating_set(self.group, &[a]))
                .clone()
        };
        let answer = exists_with_generators(self.group, &gens, b, self.budget)?;
        self.memo.lock().expect("memo lock").insert((a, b), answer);
        Ok(answer)
    }

    /// `matrix[a][b]` = whether some endomorphism maps `a` to `b`.
    pub fn arc_matrix(&self) -> Result<Vec<Vec<bool>>> {
        if let Some(m) = &self.monoid {
            return Ok(m.arc_matrix().to_vec());
        }
        let n = self.group.order();
        (0..n)
            .map(|a| (0..n).map(|b| self.arc(a, b)).collect())
            .collect()
    }
}

impl fmt::Debug for ArcOracle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArcOracle")
            .field("group", &self.group.name())
            .field("strategy", &self.strategy)
            .field("budget", &self.budget)
            .finish()
    }
}

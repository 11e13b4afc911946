//! Machine checks of the endomorphism-graph characterizations over
//! configurable fleets of groups, with witnesses for every verdict.
//!
//! Each check is identified by a short slug (see [`CHECK_IDS`]). Checks are
//! independent and run on scoped threads; the report is always sorted by id,
//! and wall-clock timings are only included on request, so two runs with the
//! same [`VerifyConfig`] serialize to identical bytes.

mod checks;
mod fleet;

use std::fmt::{self, Write as _};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::CATALOG_MAX_ORDER;
use crate::graph::MAX_VERTICES;
use crate::morphism::DEFAULT_ENUM_BUDGET;

pub use checks::hunt_converse;
pub use fleet::Subject;

/// Largest `n` accepted for the endomorphism/power graph equality check.
pub const POWER_EQUALITY_MAX_N: u64 = 48;

/// All check ids, in report order.
pub const CHECK_IDS: [&str; 17] = [
    "auto-structure",
    "centralizer-planarity",
    "clique-formula",
    "completeness",
    "converse-hunt",
    "divisibility",
    "edge-formula",
    "elementary-abelian",
    "endo-counts",
    "endo-power-equality",
    "fast-path-audit",
    "girth-bipartite-tree",
    "identity-deleted-equivalence",
    "identity-deleted-tree",
    "planarity",
    "point-basis",
    "power-in-endo",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One observation: which group, what was seen, what was expected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Selector that rebuilds the group, e.g. `abelian:2^3x2`.
    pub group: String,
    pub observed: String,
    pub expected: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub statement: String,
    pub fleet: String,
    pub status: Status,
    /// Non-asserting checks only report; they never affect the verdict.
    pub asserting: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl TheoremCheck {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.holds)
    }

    pub fn groups_checked(&self) -> usize {
        let mut seen: Vec<&str> = self.witnesses.iter().map(|w| w.group.as_str()).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Collects witnesses for one check and derives its status.
#[derive(Debug)]
pub(crate) struct Recorder {
    id: &'static str,
    statement: &'static str,
    fleet: String,
    asserting: bool,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl Recorder {
    pub(crate) fn new(id: &'static str, statement: &'static str, fleet: impl Into<String>) -> Self {
        Self {
            id,
            statement,
            fleet: fleet.into(),
            asserting: true,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn reporting_only(mut self) -> Self {
        self.asserting = false;
        self
    }

    pub(crate) fn record(
        &mut self,
        group: &str,
        observed: impl fmt::Display,
        expected: impl fmt::Display,
        holds: bool,
    ) {
        self.witnesses.push(Witness {
            group: group.to_string(),
            observed: observed.to_string(),
            expected: expected.to_string(),
            holds,
        });
    }

    /// Equality witness.
    pub(crate) fn expect_eq<T: PartialEq + fmt::Display>(&mut self, group: &str, observed: T, expected: T) {
        let holds = observed == expected;
        self.record(group, observed, expected, holds);
    }

    pub(crate) fn error(&mut self, group: &str, err: &Error) {
        self.record(group, format!("error: {err}"), "a computed value", false);
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn finish(self) -> TheoremCheck {
        let status = if self.witnesses.is_empty() {
            Status::Skipped
        } else if self.witnesses.iter().all(|w| w.holds) {
            Status::Pass
        } else {
            Status::Fail
        };
        TheoremCheck {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            fleet: self.fleet,
            status,
            asserting: self.asserting,
            witnesses: self.witnesses,
            notes: self.notes,
            elapsed_ms: None,
        }
    }
}

/// Fleet sizes and budgets for a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Cyclic groups `Z_n` for the counting formulas.
    pub formula_max_n: u64,
    /// Cyclic groups `Z_n` for endomorphism/power graph equality.
    pub power_max_n: u64,
    /// Abelian shapes checked against enumeration-backed graphs.
    pub abelian_max_order: u64,
    /// Abelian shapes checked with the closed-form arc test only.
    pub fast_path_max_order: u64,
    /// Abelian shapes on which every arc strategy is cross-checked.
    pub audit_max_order: u64,
    /// Catalog fleet: every group up to this order.
    pub catalog_max_order: usize,
    /// Add `quaternion` and `symmetric:4` to the fleets that name them.
    pub named_groups: bool,
    pub budget: u128,
    /// Restrict the run to these check ids; empty means all.
    pub only: Vec<String>,
    /// Record wall-clock time per check (makes reports non-reproducible).
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            formula_max_n: 60,
            power_max_n: POWER_EQUALITY_MAX_N,
            abelian_max_order: 32,
            fast_path_max_order: 64,
            audit_max_order: 16,
            catalog_max_order: CATALOG_MAX_ORDER,
            named_groups: true,
            budget: DEFAULT_ENUM_BUDGET,
            only: Vec::new(),
            timings: false,
        }
    }
}

impl VerifyConfig {
    /// A config in which every fleet is empty.
    pub fn empty() -> Self {
        Self {
            formula_max_n: 0,
            power_max_n: 0,
            abelian_max_order: 0,
            fast_path_max_order: 0,
            audit_max_order: 0,
            catalog_max_order: 0,
            named_groups: false,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let cap = MAX_VERTICES as u64;
        if self.power_max_n > POWER_EQUALITY_MAX_N {
            return Err(Error::Unsupported(format!(
                "power equality runs up to n = {POWER_EQUALITY_MAX_N}, requested {}",
                self.power_max_n
            )));
        }
        if self.catalog_max_order > CATALOG_MAX_ORDER {
            return Err(Error::Unsupported(format!(
                "catalog covers orders up to {CATALOG_MAX_ORDER}, requested {}",
                self.catalog_max_order
            )));
        }
        for (what, v) in [
            ("formula n", self.formula_max_n),
            ("abelian order", self.abelian_max_order),
            ("fast-path order", self.fast_path_max_order),
            ("audit order", self.audit_max_order),
        ] {
            if v > cap {
                return Err(Error::Unsupported(format!("{what} {v} exceeds the {cap}-vertex graph limit")));
            }
        }
        for id in &self.only {
            if !CHECK_IDS.contains(&id.as_str()) {
                return Err(Error::Parse(format!(
                    "unknown check id {id:?}; known ids: {}",
                    CHECK_IDS.join(", ")
                )));
            }
        }
        Ok(())
    }

    fn selected(&self) -> Vec<&'static str> {
        CHECK_IDS
            .iter()
            .copied()
            .filter(|id| self.only.is_empty() || self.only.iter().any(|o| o == id))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: VerifyConfig,
    pub checks: Vec<TheoremCheck>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn check(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Human-readable summary: one line per check plus counterexamples and notes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.asserting { "" } else { " (report only)" };
            let _ = write!(
                out,
                "[{}] {}{}: {} groups, fleet {}",
                c.status,
                c.id,
                tag,
                c.groups_checked(),
                c.fleet
            );
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, ", {ms} ms");
            }
            out.push('\n');
            let _ = writeln!(out, "    {}", c.statement);
            for w in c.counterexamples().take(5) {
                let _ = writeln!(
                    out,
                    "    counterexample {}: observed {}, expected {}",
                    w.group, w.observed, w.expected
                );
            }
            for n in &c.notes {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        };
        let _ = writeln!(out, "verdict: {verdict}");
        out
    }
}

/// Runs the selected checks. Only configuration problems are errors;
/// failures inside a check become counterexample witnesses.
pub fn run_all(config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let verifier = checks::Verifier::new(config.clone());
    let ids = config.selected();
    let mut checks: Vec<TheoremCheck> = std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| {
                let v = &verifier;
                scope.spawn(move || {
                    let start = Instant::now();
                    let mut c = v.run(id);
                    if v.config().timings {
                        c.elapsed_ms = Some(start.elapsed().as_millis() as u64);
                    }
                    c
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let failed = checks
        .iter()
        .any(|c| c.asserting && c.status == Status::Fail);
    Ok(VerificationReport {
        config: config.clone(),
        checks,
        verdict: if failed { Verdict::Fail } else { Verdict::Pass },
    })
}

/// Runs one check by id.
pub fn run_check(id: &str, config: &VerifyConfig) -> Result<TheoremCheck> {
    let mut c = config.clone();
    c.only = vec![id.to_string()];
    let report = run_all(&c)?;
    Ok(report.checks.into_iter().next().expect("one selected check"))
}

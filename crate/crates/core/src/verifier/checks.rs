use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::fleet::{abelian_fleet, catalog_fleet, cyclic_fleet, Subject};
use super::{Recorder, TheoremCheck, VerifyConfig};
use crate::arith::euler_phi;
use crate::builders::{
    auto_graph, clique_count_formula, edge_count_formula, endo_digraph, is_completeness_shape,
    is_per_prime_homocyclic, power_digraph,
};
use crate::error::{Error, Result};
use crate::graph::{
    digraphs_isomorphic, girth, graphs_isomorphic, has_hamiltonian_cycle, has_single_point_basis,
    is_bipartite, is_planar, is_strongly_connected, is_tree, maximal_cliques, minimum_point_basis,
    Digraph, Girth, SimpleGraph, DEFAULT_CLIQUE_LIMIT,
};
use crate::group::{
    are_isomorphic_groups, make_quaternion, make_symmetric, AbelianShape, ElementId, IDENTITY,
    CATALOG_MAX_ORDER,
};
use crate::morphism::{automorphism_orbits, enumerate_endomorphisms, ArcOracle, ArcStrategy};

/// Runs `f` on every subject, turning errors into counterexample witnesses.
fn each<'a>(
    rec: &mut Recorder,
    subjects: impl IntoIterator<Item = &'a Subject>,
    mut f: impl FnMut(&mut Recorder, &'a Subject) -> Result<()>,
) {
    for s in subjects {
        if let Err(e) = f(rec, s) {
            rec.error(&s.selector, &e);
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) struct Verifier {
    config: VerifyConfig,
    catalog: OnceLock<Vec<Subject>>,
    abelian: OnceLock<Vec<Subject>>,
    cyclic: OnceLock<Vec<Subject>>,
    quaternion: OnceLock<Subject>,
    s4: OnceLock<Subject>,
}

impl Verifier {
    /// `config` must already be validated.
    pub(crate) fn new(config: VerifyConfig) -> Self {
        Self {
            config,
            catalog: OnceLock::new(),
            abelian: OnceLock::new(),
            cyclic: OnceLock::new(),
            quaternion: OnceLock::new(),
            s4: OnceLock::new(),
        }
    }

    pub(crate) fn config(&self) -> &VerifyConfig {
        &self.config
    }

    fn budget(&self) -> u128 {
        self.config.budget
    }

    fn catalog(&self) -> &[Subject] {
        self.catalog
            .get_or_init(|| catalog_fleet(self.config.catalog_max_order).expect("validated catalog bound"))
    }

    fn abelian(&self, max_order: u64) -> impl Iterator<Item = &Subject> {
        let c = &self.config;
        self.abelian
            .get_or_init(|| {
                let top = c.abelian_max_order.max(c.fast_path_max_order).max(c.audit_max_order);
                abelian_fleet(top, c.abelian_max_order).expect("validated abelian bound")
            })
            .iter()
            .filter(move |s| s.order() as u64 <= max_order)
    }

    fn cyclic(&self, min_n: u64, max_n: u64) -> impl Iterator<Item = &Subject> {
        self.cyclic
            .get_or_init(|| cyclic_fleet(self.config.formula_max_n.max(self.config.power_max_n)))
            .iter()
            .filter(move |s| (min_n..=max_n).contains(&(s.order() as u64)))
    }

    fn quaternion(&self) -> &Subject {
        self.quaternion
            .get_or_init(|| Subject::new("quaternion", make_quaternion()))
    }

    fn s4(&self) -> &Subject {
        self.s4.get_or_init(|| {
            Subject::new("symmetric:4", make_symmetric(4).expect("S4 fits the order cap"))
        })
    }

    fn endo_simple(&self, s: &Subject) -> Result<SimpleGraph> {
        Ok(s.endo_digraph(self.budget())?.underlying_simple_graph())
    }

    pub(crate) fn run(&self, id: &str) -> TheoremCheck {
        match id {
            "auto-structure" => self.auto_structure(),
            "centralizer-planarity" => self.centralizer_planarity(),
            "clique-formula" => self.clique_formula(),
            "completeness" => self.completeness(),
            "converse-hunt" => self.converse_hunt(),
            "divisibility" => self.divisibility(),
            "edge-formula" => self.edge_formula(),
            "elementary-abelian" => self.elementary_abelian(),
            "endo-counts" => self.endo_counts(),
            "endo-power-equality" => self.endo_power_equality(),
            "fast-path-audit" => self.fast_path_audit(),
            "girth-bipartite-tree" => self.girth_bipartite_tree(),
            "identity-deleted-equivalence" => self.identity_deleted_equivalence(),
            "identity-deleted-tree" => self.identity_deleted_tree(),
            "planarity" => self.planarity(),
            "point-basis" => self.point_basis(),
            "power-in-endo" => self.power_in_endo(),
            other => unreachable!("unvalidated check id {other}"),
        }
    }

    fn endo_counts(&self) -> TheoremCheck {
        let max_n = self.config.formula_max_n;
        let mut rec = Recorder::new(
            "endo-counts",
            "|End(Z_n)| = n and |Aut(Z_n)| = phi(n)",
            format!("cyclic n = 1..={max_n}"),
        );
        let budget = self.budget();
        each(&mut rec, self.cyclic(1, max_n), |rec, s| {
            let m = enumerate_endomorphisms(&s.group, budget)?;
            let n = s.order() as u64;
            rec.expect_eq(
                &s.selector,
                format!("End = {}, Aut = {}", m.len(), m.automorphisms().count()),
                format!("End = {n}, Aut = {}", euler_phi(n)),
            );
            Ok(())
        });
        rec.finish()
    }

    fn endo_power_equality(&self) -> TheoremCheck {
        let max_n = self.config.power_max_n;
        let mut rec = Recorder::new(
            "endo-power-equality",
            "directed endomorphism graph of Z_n equals its directed power graph (same labeled arcs)",
            format!("cyclic n = 1..={max_n}"),
        );
        let budget = self.budget();
        each(&mut rec, self.cyclic(1, max_n), |rec, s| {
            let endo = s.endo_digraph(budget)?;
            let power = power_digraph(&s.group)?;
            let (ea, pa) = (endo.arcs(), power.arcs());
            if ea == pa {
                rec.record(&s.selector, format!("equal, {} arcs", ea.len()), "equal", true);
            } else {
                let only_endo: Vec<_> = ea.iter().filter(|x| !pa.contains(x)).take(3).collect();
                let only_power: Vec<_> = pa.iter().filter(|x| !ea.contains(x)).take(3).collect();
                rec.record(
                    &s.selector,
                    format!("endo-only arcs {only_endo:?}, power-only arcs {only_power:?}"),
                    "equal",
                    false,
                );
            }
            Ok(())
        });
        rec.finish()
    }

    fn edge_formula(&self) -> TheoremCheck {
        let max_n = self.config.formula_max_n;
        let mut rec = Recorder::new(
            "edge-formula",
            "edges of Endo(Z_n) = C(n,2) - sum of phi(d_i) phi(d_j) over proper divisor pairs d_i < d_j with d_i not dividing d_j",
            format!("cyclic n = 2..={max_n}"),
        );
        each(&mut rec, self.cyclic(2, max_n), |rec, s| {
            let edges = self.endo_simple(s)?.edge_count() as u128;
            rec.expect_eq(&s.selector, edges, edge_count_formula(s.order() as u64));
            Ok(())
        });
        rec.finish()
    }

    fn clique_formula(&self) -> TheoremCheck {
        let max_n = self.config.formula_max_n;
        let mut rec = Recorder::new(
            "clique-formula",
            "maximal cliques of Endo(Z_n) number (a_1 + ... + a_k)! / (a_1! ... a_k!) for n = p_1^a_1 ... p_k^a_k",
            format!("cyclic n = 2..={max_n}"),
        );
        each(&mut rec, self.cyclic(2, max_n), |rec, s| {
            let cliques = maximal_cliques(&self.endo_simple(s)?, DEFAULT_CLIQUE_LIMIT)?;
            let n = s.order() as u64;
            rec.expect_eq(&s.selector, cliques.len() as u128, clique_count_formula(n)?);
            if n == 6 {
                let expected = vec![vec![0, 1, 2, 4, 5], vec![0, 1, 3, 5]];
                rec.record(
                    &s.selector,
                    format!("cliques {cliques:?}"),
                    format!("cliques {expected:?}"),
                    cliques == expected,
                );
            }
            Ok(())
        });
        rec.finish()
    }

    fn completeness(&self) -> TheoremCheck {
        let max = self.config.fast_path_max_order;
        let mut rec = Recorder::new(
            "completeness",
            "for abelian G, Endo(G) is complete iff G = (Z_{p^a})^m x (Z_{p^{a+1}})^k",
            format!("abelian order <= {max}, fast path; enumeration cross-check where it fits the budget"),
        );
        let budget = self.budget();
        let mut cross_checked = 0;
        each(&mut rec, self.abelian(max), |rec, s| {
            let shape = s.shape.as_ref().ok_or(Error::NotAbelian)?;
            let fast = ArcOracle::with_strategy(&s.group, ArcStrategy::AbelianFastPath, budget)?;
            let fast_graph = endo_digraph(&fast)?;
            let complete = fast_graph.underlying_simple_graph().is_complete();
            let expected = is_completeness_shape(shape);
            rec.record(
                &s.selector,
                format!("complete: {}", yes_no(complete)),
                format!("complete: {}", yes_no(expected)),
                complete == expected,
            );
            if let Ok((d, ArcStrategy::Enumeration)) = s.endo(budget) {
                cross_checked += 1;
                if *d != fast_graph {
                    rec.record(&s.selector, "fast path differs from enumeration", "identical arc sets", false);
                }
            }
            Ok(())
        });
        rec.note(format!("{cross_checked} shapes cross-checked against full enumeration"));
        rec.finish()
    }

    fn fast_path_audit(&self) -> TheoremCheck {
        let max = self.config.audit_max_order;
        let mut rec = Recorder::new(
            "fast-path-audit",
            "enumeration, abelian fast path and constrained search give identical arc relations",
            format!("abelian order <= {max}"),
        );
        let budget = self.budget();
        each(&mut rec, self.abelian(max), |rec, s| {
            let mut matrices = Vec::new();
            for strategy in [
                ArcStrategy::Enumeration,
                ArcStrategy::AbelianFastPath,
                ArcStrategy::ConstrainedSearch,
            ] {
                let oracle = ArcOracle::with_strategy(&s.group, strategy, budget)?;
                matrices.push((strategy, oracle.arc_matrix()?));
            }
            let arcs = matrices[0].1.iter().flatten().filter(|&&b| b).count();
            let diverging: Vec<String> = matrices[1..]
                .iter()
                .filter(|(_, m)| *m != matrices[0].1)
                .map(|(st, _)| st.to_string())
                .collect();
            if diverging.is_empty() {
                rec.record(&s.selector, format!("all strategies agree, {arcs} related pairs"), "agreement", true);
            } else {
                rec.record(
                    &s.selector,
                    format!("{} differ from enumeration", diverging.join(", ")),
                    "agreement",
                    false,
                );
            }
            Ok(())
        });
        rec.finish()
    }

    fn divisibility(&self) -> TheoremCheck {
        let c = &self.config;
        let mut rec = Recorder::new(
            "divisibility",
            "an arc a -> b forces |b| to divide |a|; the converse holds exactly for abelian groups homocyclic at every prime",
            format!(
                "forward: catalog order <= {} and abelian order <= {}; converse: abelian order <= {}",
                c.catalog_max_order, c.abelian_max_order, c.fast_path_max_order
            ),
        );
        let budget = self.budget();
        let forward = |rec: &mut Recorder, s: &Subject| -> Result<()> {
            let d = s.endo_digraph(budget)?;
            let bad: Vec<_> = d
                .arcs()
                .into_iter()
                .filter(|&(a, b)| s.group.elem_order(a) % s.group.elem_order(b) != 0)
                .collect();
            rec.record(
                &s.selector,
                format!("forward: {} violating arcs{}", bad.len(), if bad.is_empty() { String::new() } else { format!(" e.g. {:?}", bad[0]) }),
                "forward: 0 violating arcs",
                bad.is_empty(),
            );
            Ok(())
        };
        each(&mut rec, self.catalog(), forward);
        each(&mut rec, self.abelian(c.abelian_max_order), forward);
        each(&mut rec, self.abelian(c.fast_path_max_order), |rec, s| {
            let shape = s.shape.as_ref().ok_or(Error::NotAbelian)?;
            let d = s.endo_digraph(budget)?;
            if is_per_prime_homocyclic(shape) {
                let g = &s.group;
                let missing = g
                    .elements()
                    .flat_map(|a| g.elements().map(move |b| (a, b)))
                    .filter(|&(a, b)| a != b && g.elem_order(a) % g.elem_order(b) == 0 && !d.has_arc(a, b))
                    .count();
                rec.record(
                    &s.selector,
                    format!("converse: {missing} divisible pairs without an arc"),
                    "converse: 0 divisible pairs without an arc",
                    missing == 0,
                );
            } else {
                let (a, b, ca, cb) = separating_pair(s, shape)?;
                let divides = s.group.elem_order(a) % s.group.elem_order(b) == 0;
                let arc = d.has_arc(a, b);
                rec.record(
                    &s.selector,
                    format!("witness {ca:?} -> {cb:?}: |b| divides |a|: {}, arc: {}", yes_no(divides), yes_no(arc)),
                    format!("witness {ca:?} -> {cb:?}: |b| divides |a|: yes, arc: no"),
                    divides && !arc,
                );
            }
            Ok(())
        });
        rec.note("converse witnesses use exponents u, v >= 1: a = p^(e1-e2) in a Z_{p^e1} coordinate, b = 1 in a Z_{p^e2} coordinate");
        rec.finish()
    }

    fn centralizer_planarity(&self) -> TheoremCheck {
        let mut rec = Recorder::new(
            "centralizer-planarity",
            "if some a in G has |G : C(a)| > 3 then Endo(G) is non-planar",
            format!("non-abelian catalog order <= {} and symmetric:4", self.config.catalog_max_order),
        );
        let fleet = self
            .catalog()
            .iter()
            .filter(|s| !s.group.is_abelian())
            .chain(self.config.named_groups.then(|| self.s4()));
        let mut notes = Vec::new();
        each(&mut rec, fleet, |rec, s| {
            let g = &s.group;
            let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for x in g.elements() {
                let v = by_order.entry(g.elem_order(x)).or_default();
                v.push(g.centralizer_index(x));
                v.sort_unstable();
                v.dedup();
            }
            let best = g
                .elements()
                .max_by_key(|&x| (g.centralizer_index(x), std::cmp::Reverse(x)))
                .unwrap_or(IDENTITY);
            let index = g.centralizer_index(best);
            let census = by_order
                .iter()
                .map(|(o, idx)| format!("order {o}: {idx:?}"))
                .collect::<Vec<_>>()
                .join(", ");
            notes.push(format!("{} centralizer indices by element order: {census}", s.selector));
            if index <= 3 {
                notes.push(format!("{} vacuous: every centralizer index is at most 3", s.selector));
                return Ok(());
            }
            let planar = is_planar(&self.endo_simple(s)?);
            rec.record(
                &s.selector,
                format!("{} (a = {best} of order {}, |G:C(a)| = {index})", if planar { "planar" } else { "non-planar" }, g.elem_order(best)),
                "non-planar",
                !planar,
            );
            Ok(())
        });
        for n in notes {
            rec.note(n);
        }
        rec.finish()
    }

    fn planarity(&self) -> TheoremCheck {
        let max = self.config.abelian_max_order;
        let mut rec = Recorder::new(
            "planarity",
            "for abelian G, Endo(G) is planar iff |G| <= 4; Z2, Z4, Z3, Z2 x Z2 give K2, K4, K3, K4",
            format!("abelian order <= {max}"),
        );
        each(&mut rec, self.abelian(max), |rec, s| {
            let g = self.endo_simple(s)?;
            let planar = is_planar(&g);
            rec.record(
                &s.selector,
                format!("planar: {}", yes_no(planar)),
                format!("planar: {}", yes_no(s.order() <= 4)),
                planar == (s.order() <= 4),
            );
            if (2..=4).contains(&s.order()) {
                let observed = if g.is_complete() { format!("K{}", g.vertex_count()) } else { format!("{} edges, not complete", g.edge_count()) };
                rec.expect_eq(&s.selector, observed, format!("K{}", s.order()));
            }
            Ok(())
        });
        rec.finish()
    }

    fn girth_bipartite_tree(&self) -> TheoremCheck {
        let mut rec = Recorder::new(
            "girth-bipartite-tree",
            "for non-trivial G: girth of Endo(G) is 3 unless G = Z2; Endo(G) bipartite iff tree iff G = Z2",
            format!("catalog order 2..={}", self.config.catalog_max_order),
        );
        each(&mut rec, self.catalog().iter().filter(|s| s.order() > 1), |rec, s| {
            let g = self.endo_simple(s)?;
            let z2 = s.order() == 2;
            let expected_girth = if z2 { Girth::Infinite } else { Girth::Finite(3) };
            rec.expect_eq(
                &s.selector,
                format!("girth {}, bipartite {}, tree {}", girth(&g), yes_no(is_bipartite(&g)), yes_no(is_tree(&g))),
                format!("girth {expected_girth}, bipartite {z}, tree {z}", z = yes_no(z2)),
            );
            Ok(())
        });
        rec.finish()
    }

    fn identity_deleted_equivalence(&self) -> TheoremCheck {
        let mut rec = Recorder::new(
            "identity-deleted-equivalence",
            "on the identity-deleted directed endomorphism graph: strongly connected (stated as 'not disconnected') iff complete digraph iff Hamiltonian",
            format!("catalog order 3..={}", self.config.catalog_max_order),
        );
        let budget = self.budget();
        each(&mut rec, self.catalog().iter().filter(|s| s.order() >= 3), |rec, s| {
            let d = s.endo_digraph(budget)?.delete_vertex(IDENTITY)?;
            let sc = is_strongly_connected(&d);
            let complete = d.is_complete_digraph();
            let ham = has_hamiltonian_cycle(&d)?;
            rec.record(
                &s.selector,
                format!("strongly connected {}, complete digraph {}, Hamiltonian {}", yes_no(sc), yes_no(complete), yes_no(ham)),
                "all three equal",
                sc == complete && complete == ham,
            );
            Ok(())
        });
        rec.note("connectivity predicate implemented: strong connectivity (every vertex reaches every other along arcs)");
        rec.note("groups with fewer than two non-identity elements are skipped");
        rec.finish()
    }

    fn elementary_abelian(&self) -> TheoremCheck {
        let max = self.config.abelian_max_order;
        let mut rec = Recorder::new(
            "elementary-abelian",
            "for non-trivial abelian G, the identity-deleted directed endomorphism graph is strongly connected iff G = (Z_p)^k",
            format!("abelian order 2..={max}"),
        );
        let budget = self.budget();
        each(&mut rec, self.abelian(max).filter(|s| s.order() > 1), |rec, s| {
            let shape = s.shape.as_ref().ok_or(Error::NotAbelian)?;
            let d = s.endo_digraph(budget)?.delete_vertex(IDENTITY)?;
            rec.expect_eq(
                &s.selector,
                format!("strongly connected: {}", yes_no(is_strongly_connected(&d))),
                format!("strongly connected: {}", yes_no(shape.is_elementary())),
            );
            Ok(())
        });
        rec.note("connectivity predicate implemented: strong connectivity");
        rec.finish()
    }

    fn identity_deleted_tree(&self) -> TheoremCheck {
        let mut rec = Recorder::new(
            "identity-deleted-tree",
            "Endo(G*) is a tree iff G = Z2 or G = Z3",
            format!("catalog order <= {}", self.config.catalog_max_order),
        );
        each(&mut rec, self.catalog(), |rec, s| {
            let g = self.endo_simple(s)?.delete_vertex(IDENTITY)?;
            rec.expect_eq(
                &s.selector,
                format!("tree: {}", yes_no(is_tree(&g))),
                format!("tree: {}", yes_no(matches!(s.order(), 2 | 3))),
            );
            Ok(())
        });
        rec.finish()
    }

    fn auto_structure(&self) -> TheoremCheck {
        let mut rec = Recorder::new(
            "auto-structure",
            "components of Auto(G) are complete graphs equal to the automorphism orbits; the identity is isolated; Auto(G) is a subgraph of Endo(G)",
            format!("catalog order <= {}", self.config.catalog_max_order),
        );
        let budget = self.budget();
        each(&mut rec, self.catalog(), |rec, s| {
            let auto = auto_graph(&s.group, budget)?;
            let comps = auto.components();
            let orbits = automorphism_orbits(&s.group, budget)?;
            let all_complete = comps.iter().all(|c| auto.induced(c).is_complete());
            let isolated = auto.degree(IDENTITY) == 0;
            let inside = auto.is_subgraph_of(&self.endo_simple(s)?);
            rec.record(
                &s.selector,
                format!(
                    "components complete {}, components = orbits {}, identity isolated {}, inside Endo {}",
                    yes_no(all_complete),
                    yes_no(comps == orbits),
                    yes_no(isolated),
                    yes_no(inside)
                ),
                "all yes",
                all_complete && comps == orbits && isolated && inside,
            );
            Ok(())
        });
        rec.finish()
    }

    fn point_basis(&self) -> TheoremCheck {
        let max = self.config.abelian_max_order;
        let mut rec = Recorder::new(
            "point-basis",
            "the directed endomorphism graph of every abelian group has a single point basis; so does that of Q8, which is not abelian",
            format!("abelian order <= {max} and quaternion"),
        );
        let budget = self.budget();
        let record = |rec: &mut Recorder, s: &Subject| -> Result<()> {
            let d = s.endo_digraph(budget)?;
            let basis = minimum_point_basis(d);
            rec.record(
                &s.selector,
                format!("point basis {basis:?}"),
                "a single vertex",
                has_single_point_basis(d),
            );
            Ok(())
        };
        each(&mut rec, self.abelian(max), record);
        let q = self.config.named_groups.then(|| self.quaternion());
        each(&mut rec, q, |rec, s| {
            record(rec, s)?;
            // element 2 is i
            let d = s.endo_digraph(budget)?;
            let reached = d.out_degree(2);
            rec.expect_eq(&s.selector, format!("i has {reached} out-neighbours"), format!("i has {} out-neighbours", s.order() - 1));
            Ok(())
        });
        rec.finish()
    }

    fn converse_hunt(&self) -> TheoremCheck {
        hunt_subjects(self.catalog(), self.config.catalog_max_order, self.budget())
    }

    fn power_in_endo(&self) -> TheoremCheck {
        let mut rec = Recorder::new(
            "power-in-endo",
            "directed power graph is contained in the directed endomorphism graph (measured, not asserted)",
            format!("catalog order <= {}", self.config.catalog_max_order),
        )
        .reporting_only();
        let budget = self.budget();
        each(&mut rec, self.catalog(), |rec, s| {
            let endo = s.endo_digraph(budget)?;
            let power = power_digraph(&s.group)?;
            let outside: Vec<_> = power.arcs().into_iter().filter(|&(a, b)| !endo.has_arc(a, b)).collect();
            rec.record(
                &s.selector,
                format!("{} power arcs outside Endo{}", outside.len(), outside.first().map(|x| format!(", e.g. {x:?}")).unwrap_or_default()),
                "0 power arcs outside Endo",
                outside.is_empty(),
            );
            Ok(())
        });
        rec.finish()
    }
}

/// Coordinates separating divisibility from arcs in a shape that is not
/// homocyclic at some prime `p` with exponents `e1 > e2`.
fn separating_pair(s: &Subject, shape: &AbelianShape) -> Result<(ElementId, ElementId, Vec<u64>, Vec<u64>)> {
    let p = s
        .group
        .presentation()
        .ok_or_else(|| Error::Unsupported("no cyclic-factor presentation".into()))?;
    let layout: Vec<(u64, u32)> = shape
        .factors()
        .iter()
        .flat_map(|f| std::iter::repeat((f.prime, f.exponent)).take(f.multiplicity as usize))
        .collect();
    let moduli: Vec<u64> = layout.iter().map(|&(q, e)| q.pow(e)).collect();
    if moduli != p.moduli() {
        return Err(Error::Unsupported("presentation does not follow the shape layout".into()));
    }
    let prime = shape
        .factors()
        .windows(2)
        .find(|w| w[0].prime == w[1].prime)
        .map(|w| w[0].prime)
        .ok_or_else(|| Error::InvalidShape(format!("{} is homocyclic at every prime", shape.selector())))?;
    let i = layout.iter().position(|&(q, _)| q == prime).expect("prime present");
    let j = layout.iter().rposition(|&(q, _)| q == prime).expect("prime present");
    let (e1, e2) = (layout[i].1, layout[j].1);
    let mut ca = vec![0; layout.len()];
    let mut cb = vec![0; layout.len()];
    ca[i] = prime.pow(e1 - e2);
    cb[j] = 1;
    Ok((p.element(&ca), p.element(&cb), ca, cb))
}

fn hunt_subjects(fleet: &[Subject], max_order: usize, budget: u128) -> TheoremCheck {
    let mut rec = Recorder::new(
        "converse-hunt",
        "non-isomorphic groups of equal order have non-isomorphic directed endomorphism graphs (conjecture; reported, never asserted)",
        format!("catalog order <= {max_order}, all equal-order pairs"),
    )
    .reporting_only();
    let mut undirected = Vec::new();
    for (i, s) in fleet.iter().enumerate() {
        for t in &fleet[i + 1..] {
            if s.order() != t.order() {
                continue;
            }
            let pair = format!("{} / {}", s.selector, t.selector);
            let outcome = (|| -> Result<(bool, bool, bool)> {
                let groups_iso = are_isomorphic_groups(&s.group, &t.group);
                let (ds, dt): (&Digraph, &Digraph) = (s.endo_digraph(budget)?, t.endo_digraph(budget)?);
                let directed = digraphs_isomorphic(ds, dt)?;
                let simple = graphs_isomorphic(&ds.underlying_simple_graph(), &dt.underlying_simple_graph())?;
                Ok((groups_iso, directed, simple))
            })();
            match outcome {
                Ok((true, _, _)) => rec.note(format!("{pair}: groups are isomorphic, pair ignored")),
                Ok((false, directed, simple)) => {
                    if simple {
                        undirected.push(pair.clone());
                    }
                    rec.record(
                        &pair,
                        format!(
                            "directed graphs isomorphic: {}, undirected graphs isomorphic: {}",
                            yes_no(directed),
                            yes_no(simple)
                        ),
                        "directed graphs isomorphic: no",
                        !directed,
                    );
                }
                Err(e) => rec.error(&pair, &e),
            }
        }
    }
    if undirected.is_empty() {
        rec.note("no pair with isomorphic undirected endomorphism graphs");
    } else {
        rec.note(format!("undirected endomorphism graphs coincide for: {}", undirected.join(", ")));
    }
    rec.finish()
}

/// Pairwise directed endomorphism graph isomorphism sweep over the catalog.
pub fn hunt_converse(max_order: usize, budget: u128) -> Result<TheoremCheck> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "hunt covers catalog orders up to {CATALOG_MAX_ORDER}, requested {max_order}"
        )));
    }
    Ok(hunt_subjects(&catalog_fleet(max_order)?, max_order, budget))
}

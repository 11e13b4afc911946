//! Endomorphisms and automorphisms of a finite group.
//!
//! Morphisms are found by backtracking over the images of a greedy
//! generating set: a generator of order `k` can only go to an element whose
//! order divides `k`, and each partial assignment is checked by extending it
//! to the subgroup it generates.

mod fast;
mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{extend_from_generators, greedy_generating_set, ElementId, Group, IDENTITY};

pub use fast::{abelian_arc_fast, cyclic_product_arc, presented_arc};
pub use oracle::{ArcOracle, ArcStrategy};

/// Default cap on the number of generator-image combinations an exhaustive
/// search may visit.
pub const DEFAULT_ENUM_BUDGET: u128 = 1_000_000;

/// A homomorphism from a group to itself, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Morphism {
    image: Vec<ElementId>,
    bijective: bool,
}

impl Morphism {
    /// Validates `image` against the homomorphism law of `g`.
    pub fn new(g: &Group, image: Vec<ElementId>) -> Result<Self> {
        if !is_homomorphism(g, &image)? {
            return Err(Error::NotHomomorphism);
        }
        Ok(Self::trusted(image))
    }

    fn trusted(image: Vec<ElementId>) -> Self {
        let mut hit = vec![false; image.len()];
        for &y in &image {
            hit[y] = true;
        }
        let bijective = hit.iter().all(|&h| h);
        Self { image, bijective }
    }

    pub fn identity(g: &Group) -> Self {
        Self::trusted(g.elements().collect())
    }

    /// The map sending everything to the identity.
    pub fn trivial(g: &Group) -> Self {
        Self::trusted(vec![IDENTITY; g.order()])
    }

    pub fn image(&self) -> &[ElementId] {
        &self.image
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.image[x]
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    /// `self ∘ inner`, i.e. `x -> self(inner(x))`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        compose(self, inner)
    }
}

/// `f ∘ h`.
pub fn compose(f: &Morphism, h: &Morphism) -> Result<Morphism> {
    if f.image.len() != h.image.len() {
        return Err(Error::GroupMismatch {
            left: f.image.len(),
            right: h.image.len(),
        });
    }
    Ok(Morphism::trusted(
        h.image.iter().map(|&x| f.image[x]).collect(),
    ))
}

/// Full scan of `f(xy) = f(x) f(y)`.
pub fn is_homomorphism(g: &Group, image: &[ElementId]) -> Result<bool> {
    if image.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            got: image.len(),
        });
    }
    if let Some(&bad) = image.iter().find(|&&y| y >= g.order()) {
        return Err(Error::ElementOutOfRange {
            element: bad,
            order: g.order(),
        });
    }
    Ok(g.elements()
        .all(|x| g.elements().all(|y| image[g.op(x, y)] == g.op(image[x], image[y]))))
}

/// All endomorphisms of one group plus the induced "some map sends a to b"
/// relation.
#[derive(Debug, Clone)]
pub struct EndoMonoid {
    morphisms: Vec<Morphism>,
    arcs: Vec<Vec<bool>>,
}

impl EndoMonoid {
    fn from_morphisms(order: usize, mut morphisms: Vec<Morphism>) -> Self {
        morphisms.sort();
        morphisms.dedup();
        let mut arcs = vec![vec![false; order]; order];
        for f in &morphisms {
            for (x, &y) in f.image.iter().enumerate() {
                arcs[x][y] = true;
            }
        }
        Self { morphisms, arcs }
    }

    /// Morphisms in lexicographic order of their image arrays.
    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        self.morphisms.binary_search(f).is_ok()
    }

    /// Whether some endomorphism maps `a` to `b` (true when `a == b`).
    pub fn arc(&self, a: ElementId, b: ElementId) -> bool {
        self.arcs[a][b]
    }

    pub fn arc_matrix(&self) -> &[Vec<bool>] {
        &self.arcs
    }

    pub fn automorphisms(&self) -> impl Iterator<Item = &Morphism> {
        self.morphisms.iter().filter(|f| f.bijective)
    }
}

/// Number of generator-image combinations for `candidates`, saturating.
fn combinations(candidates: &[Vec<ElementId>]) -> u128 {
    candidates
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
}

fn check_budget(candidates: &[Vec<ElementId>], budget: u128) -> Result<()> {
    let combinations = combinations(candidates);
    if combinations > budget {
        return Err(Error::BudgetExceeded {
            combinations,
            budget,
        });
    }
    Ok(())
}

/// Depth-first search over generator images. `visit` receives every complete
/// homomorphism and returns `false` to stop the search.
struct Search<'a> {
    g: &'a Group,
    gens: &'a [ElementId],
    candidates: &'a [Vec<ElementId>],
    injective: bool,
}

impl Search<'_> {
    fn run(&self, images: &mut Vec<ElementId>, visit: &mut dyn FnMut(Vec<ElementId>) -> bool) -> bool {
        let depth = images.len();
        if depth == self.gens.len() {
            let map = extend_from_generators(self.g, self.g, self.gens, images, self.injective)
                .expect("checked at the previous depth");
            let image = map
                .into_iter()
                .map(|y| y.expect("generators span the group"))
                .collect();
            return visit(image);
        }
        for &y in &self.candidates[depth] {
            images.push(y);
            let ok = extend_from_generators(
                self.g,
                self.g,
                &self.gens[..=depth],
                images,
                self.injective,
            )
            .is_some();
            if ok && !self.run(images, visit) {
                images.pop();
                return false;
            }
            images.pop();
        }
        true
    }
}

fn dividing_candidates(g: &Group, x: ElementId) -> Vec<ElementId> {
    g.elements()
        .filter(|&y| g.elem_order(x) % g.elem_order(y) == 0)
        .collect()
}

/// Every endomorphism of `g`.
///
/// Fails with [`Error::BudgetExceeded`] when the generator-image search space
/// exceeds `budget`; callers then fall back to per-pair queries.
pub fn enumerate_endomorphisms(g: &Group, budget: u128) -> Result<EndoMonoid> {
    let gens = greedy_generating_set(g, &[]);
    let candidates: Vec<Vec<ElementId>> = gens.iter().map(|&s| dividing_candidates(g, s)).collect();
    check_budget(&candidates, budget)?;
    let mut found = Vec::new();
    Search {
        g,
        gens: &gens,
        candidates: &candidates,
        injective: false,
    }
    .run(&mut Vec::new(), &mut |image| {
        found.push(Morphism::trusted(image));
        true
    });
    Ok(EndoMonoid::from_morphisms(g.order(), found))
}

/// Every automorphism of `g`, in lexicographic order of image arrays.
pub fn enumerate_automorphisms(g: &Group, budget: u128) -> Result<Vec<Morphism>> {
    let gens = greedy_generating_set(g, &[]);
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            g.elements()
                .filter(|&y| g.elem_order(y) == g.elem_order(s))
                .collect()
        })
        .collect();
    check_budget(&candidates, budget)?;
    let mut found = Vec::new();
    Search {
        g,
        gens: &gens,
        candidates: &candidates,
        injective: true,
    }
    .run(&mut Vec::new(), &mut |image| {
        found.push(Morphism::trusted(image));
        true
    });
    found.sort();
    Ok(found)
}

/// Whether some endomorphism of `g` maps `a` to `b`, by a search with the
/// image of `a` pinned to `b`.
pub fn exists_endo_arc(g: &Group, a: ElementId, b: ElementId, budget: u128) -> Result<bool> {
    for x in [a, b] {
        if x >= g.order() {
            return Err(Error::ElementOutOfRange {
                element: x,
                order: g.order(),
            });
        }
    }
    if a == b || b == IDENTITY {
        return Ok(true);
    }
    if a == IDENTITY || g.elem_order(a) % g.elem_order(b) != 0 {
        return Ok(false);
    }
    let gens = greedy_generating_set(g, &[a]);
    exists_with_generators(g, &gens, b, budget)
}

pub(crate) fn exists_with_generators(
    g: &Group,
    gens: &[ElementId],
    b: ElementId,
    budget: u128,
) -> Result<bool> {
    let mut candidates: Vec<Vec<ElementId>> = vec![vec![b]];
    candidates.extend(gens[1..].iter().map(|&s| dividing_candidates(g, s)));
    check_budget(&candidates, budget)?;
    let mut found = false;
    Search {
        g,
        gens,
        candidates: &candidates,
        injective: false,
    }
    .run(&mut Vec::new(), &mut |_| {
        found = true;
        false
    });
    Ok(found)
}

/// Orbits of the automorphism group, each sorted, ordered by least element.
pub fn automorphism_orbits(g: &Group, budget: u128) -> Result<Vec<Vec<ElementId>>> {
    let autos = enumerate_automorphisms(g, budget)?;
    Ok(orbits_of(g.order(), &autos))
}

pub(crate) fn orbits_of(order: usize, autos: &[Morphism]) -> Vec<Vec<ElementId>> {
    let mut assigned = vec![false; order];
    let mut orbits = Vec::new();
    for x in 0..order {
        if assigned[x] {
            continue;
        }
        let mut orbit: Vec<ElementId> = autos.iter().map(|f| f.apply(x)).collect();
        orbit.push(x);
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            assigned[y] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_abelian, make_cyclic, make_quaternion, AbelianShape};

    fn klein() -> Group {
        make_abelian(&AbelianShape::parse("2x2").unwrap()).unwrap()
    }

    #[test]
    fn homomorphism_law() {
        let z6 = make_cyclic(6);
        assert!(is_homomorphism(&z6, &[0, 1, 2, 3, 4, 5]).unwrap());
        assert!(is_homomorphism(&z6, &[0; 6]).unwrap());
        assert!(is_homomorphism(&z6, &[0, 2, 4, 0, 2, 4]).unwrap());
        assert!(!is_homomorphism(&z6, &[0, 2, 1, 3, 4, 5]).unwrap());
        assert!(matches!(
            is_homomorphism(&z6, &[0, 1]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Morphism::new(&z6, vec![0, 2, 1, 3, 4, 5]),
            Err(Error::NotHomomorphism)
        ));
    }

    #[test]
    fn endomorphisms_of_z6_are_multiplications() {
        let z6 = make_cyclic(6);
        let monoid = enumerate_endomorphisms(&z6, DEFAULT_ENUM_BUDGET).unwrap();
        let expected: Vec<Vec<usize>> = (0..6).map(|k| (0..6).map(|i| k * i % 6).collect()).collect();
        let mut got: Vec<Vec<usize>> = monoid.morphisms().iter().map(|f| f.image().to_vec()).collect();
        got.sort();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(got, expected_sorted);
        let autos = enumerate_automorphisms(&z6, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(
            autos.iter().map(|f| f.image().to_vec()).collect::<Vec<_>>(),
            vec![expected[1].clone(), expected[5].clone()]
        );
    }

    #[test]
    fn counts_for_small_groups() {
        let trivial = make_cyclic(1);
        assert_eq!(enumerate_endomorphisms(&trivial, 1).unwrap().len(), 1);
        assert_eq!(enumerate_automorphisms(&trivial, 1).unwrap().len(), 1);
        assert_eq!(enumerate_endomorphisms(&klein(), DEFAULT_ENUM_BUDGET).unwrap().len(), 16);
        assert_eq!(enumerate_automorphisms(&klein(), DEFAULT_ENUM_BUDGET).unwrap().len(), 6);
        assert_eq!(enumerate_endomorphisms(&make_quaternion(), DEFAULT_ENUM_BUDGET).unwrap().len(), 28);
    }

    #[test]
    fn budget_is_enforced() {
        let g = make_abelian(&AbelianShape::parse("2x2x2x2x2").unwrap()).unwrap();
        assert!(matches!(
            enumerate_endomorphisms(&g, DEFAULT_ENUM_BUDGET),
            Err(Error::BudgetExceeded { combinations: 33_554_432, .. })
        ));
        assert!(enumerate_endomorphisms(&klein(), 15).is_err());
        assert!(enumerate_endomorphisms(&klein(), 16).is_ok());
    }

    #[test]
    fn pinned_arc_queries() {
        let z4 = make_cyclic(4);
        assert!(exists_endo_arc(&z4, 1, 2, DEFAULT_ENUM_BUDGET).unwrap());
        assert!(!exists_endo_arc(&z4, 2, 1, DEFAULT_ENUM_BUDGET).unwrap());
        for a in z4.elements() {
            assert!(exists_endo_arc(&z4, a, IDENTITY, DEFAULT_ENUM_BUDGET).unwrap());
        }
        let q8 = make_quaternion();
        // element 2 is i
        for x in q8.elements() {
            assert!(exists_endo_arc(&q8, 2, x, DEFAULT_ENUM_BUDGET).unwrap());
        }
        assert!(exists_endo_arc(&q8, 9, 0, 10).is_err());
    }

    #[test]
    fn composition() {
        let z6 = make_cyclic(6);
        let f = |k: usize| Morphism::new(&z6, (0..6).map(|i| k * i % 6).collect()).unwrap();
        assert_eq!(compose(&f(2), &Morphism::identity(&z6)).unwrap(), f(2));
        assert_eq!(compose(&f(2), &f(3)).unwrap(), Morphism::trivial(&z6));
        assert!(compose(&f(5), &f(5)).unwrap().is_bijective());
        let z4 = make_cyclic(4);
        assert!(compose(&f(1), &Morphism::identity(&z4)).is_err());
    }

    #[test]
    fn orbits() {
        let z6 = make_cyclic(6);
        assert_eq!(
            automorphism_orbits(&z6, DEFAULT_ENUM_BUDGET).unwrap(),
            vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]
        );
        assert_eq!(automorphism_orbits(&make_cyclic(1), 1).unwrap(), vec![vec![0]]);
        assert_eq!(
            automorphism_orbits(&klein(), DEFAULT_ENUM_BUDGET).unwrap(),
            vec![vec![0], vec![1, 2, 3]]
        );
    }
}

//! Finite groups stored as Cayley tables.
//!
//! Elements are dense indices `0..n` and index 0 is always the identity.

mod catalog;
mod construct;
mod iso;
mod shape;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::{catalog_entries, catalog_groups_up_to, CatalogEntry, CATALOG_MAX_ORDER};
pub use construct::{
    make_abelian, make_abelian_capped, make_cyclic, make_dihedral, make_direct_product,
    make_direct_product_capped, make_from_permutation_generators,
    make_from_permutation_generators_capped, make_quaternion, make_symmetric, perm_from_cycles,
    Permutation, DEFAULT_ORDER_CAP,
};
pub use iso::{
    are_isomorphic_groups, extend_from_generators, find_isomorphism, generated_subgroup,
    greedy_generating_set,
};
pub use shape::{AbelianShape, ShapeFactor};

/// Index of a group element. `0` is the identity.
pub type ElementId = usize;

pub const IDENTITY: ElementId = 0;

/// Largest order for which [`Group::validate_axioms`] runs its full scan by default.
pub const DEFAULT_AXIOM_SCAN_CAP: usize = 64;

/// Human-readable description of how a group was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub name: String,
    pub order: usize,
    pub family: String,
    pub params: serde_json::Value,
}

/// Coordinates of every element in a product of cyclic groups
/// `Z_{d_1} x ... x Z_{d_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPresentation {
    moduli: Vec<u64>,
    coords: Vec<Vec<u64>>,
    by_radix: Vec<ElementId>,
}

impl CyclicPresentation {
    /// Presentation in which element `i` has mixed-radix digits of `i`
    /// (last factor varies fastest).
    pub(crate) fn mixed_radix(moduli: Vec<u64>) -> Self {
        let order: u64 = moduli.iter().product();
        let coords: Vec<Vec<u64>> = (0..order).map(|i| radix_digits(&moduli, i)).collect();
        let by_radix = (0..order as usize).collect();
        Self {
            moduli,
            coords,
            by_radix,
        }
    }

    /// Presentation where `elements[r]` is the element with mixed-radix index `r`.
    pub(crate) fn relabeled(moduli: Vec<u64>, elements: Vec<ElementId>) -> Self {
        let mut coords = vec![Vec::new(); elements.len()];
        for (r, &x) in elements.iter().enumerate() {
            coords[x] = radix_digits(&moduli, r as u64);
        }
        Self {
            moduli,
            coords,
            by_radix: elements,
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn coords(&self, x: ElementId) -> &[u64] {
        &self.coords[x]
    }

    /// Element with the given coordinates (reduced modulo each factor).
    pub fn element(&self, coords: &[u64]) -> ElementId {
        assert_eq!(coords.len(), self.moduli.len(), "coordinate arity");
        let r = coords
            .iter()
            .zip(&self.moduli)
            .fold(0u64, |acc, (&c, &d)| acc * d + c % d);
        self.by_radix[r as usize]
    }
}

fn radix_digits(moduli: &[u64], mut r: u64) -> Vec<u64> {
    let mut digits = vec![0; moduli.len()];
    for (slot, &d) in digits.iter_mut().zip(moduli).rev() {
        *slot = r % d;
        r /= d;
    }
    digits
}

/// A finite group given by its Cayley table.
#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    table: Vec<ElementId>,
    inverse: Vec<ElementId>,
    elem_order: Vec<usize>,
    descriptor: Descriptor,
    shape: Option<AbelianShape>,
    presentation: Option<CyclicPresentation>,
}

impl Group {
    /// Builds a group from a row-major Cayley table.
    ///
    /// Checks that element 0 is a two-sided identity and that every row and
    /// column is a permutation. Associativity is not checked here, see
    /// [`Group::validate_axioms`].
    pub fn from_table(
        order: usize,
        table: Vec<ElementId>,
        name: impl Into<String>,
        family: impl Into<String>,
        params: serde_json::Value,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Unsupported("empty group".into()));
        }
        if table.len() != order * order {
            return Err(Error::LengthMismatch {
                expected: order * order,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(Error::Unsupported(format!(
                    "element 0 is not the identity (fails at {a})"
                )));
            }
        }
        let mut seen = vec![false; order];
        for a in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                seen[table[a * order + b]] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(Error::Unsupported(format!("row {a} is not a permutation")));
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                seen[table[b * order + a]] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(Error::Unsupported(format!(
                    "column {a} is not a permutation"
                )));
            }
        }
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] == IDENTITY)
                    .expect("latin rows contain the identity")
            })
            .collect();
        let elem_order = (0..order)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != IDENTITY {
                    x = table[x * order + a];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Self {
            order,
            table,
            inverse,
            elem_order,
            descriptor: Descriptor {
                name: name.into(),
                order,
                family: family.into(),
                params,
            },
            shape: None,
            presentation: None,
        })
    }

    pub(crate) fn with_abelian_metadata(
        mut self,
        shape: Option<AbelianShape>,
        presentation: Option<CyclicPresentation>,
    ) -> Self {
        self.shape = shape;
        self.presentation = presentation;
        self
    }

    pub(crate) fn renamed(mut self, name: &str, family: &str, params: serde_json::Value) -> Self {
        self.descriptor.name = name.to_string();
        self.descriptor.family = family.to_string();
        self.descriptor.params = params;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    #[inline]
    pub fn op(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverse[a]
    }

    #[inline]
    pub fn elem_order(&self, a: ElementId) -> usize {
        self.elem_order[a]
    }

    pub fn elem_orders(&self) -> &[usize] {
        &self.elem_order
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn name(&self) -> &str {
        &self.descriptor.name
    }

    /// Row-major Cayley table as nested rows.
    pub fn cayley_rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn power(&self, a: ElementId, k: usize) -> ElementId {
        let k = k % self.elem_order[a];
        (0..k).fold(IDENTITY, |acc, _| self.op(acc, a))
    }

    /// Number of elements of each order.
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for &k in &self.elem_order {
            *census.entry(k).or_insert(0) += 1;
        }
        census
    }

    /// Full associativity, identity and inverse scan.
    ///
    /// Refuses groups larger than `cap` with [`Error::SizeCap`].
    pub fn validate_axioms(&self, cap: usize) -> Result<bool> {
        let n = self.order;
        if n > cap {
            return Err(Error::SizeCap { order: n, cap });
        }
        for a in 0..n {
            if self.op(a, IDENTITY) != a
                || self.op(IDENTITY, a) != a
                || self.op(a, self.inverse[a]) != IDENTITY
                || self.op(self.inverse[a], a) != IDENTITY
            {
                return Ok(false);
            }
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn commute(&self, a: ElementId, b: ElementId) -> bool {
        self.op(a, b) == self.op(b, a)
    }

    /// `C(a) = { x : xa = ax }`, ascending.
    pub fn centralizer(&self, a: ElementId) -> Vec<ElementId> {
        self.elements().filter(|&x| self.commute(x, a)).collect()
    }

    /// Index `|G : C(a)|`.
    pub fn centralizer_index(&self, a: ElementId) -> usize {
        self.order / self.centralizer(a).len()
    }

    pub fn center(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.elements().all(|y| self.commute(x, y)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Primary decomposition of an abelian group, `None` otherwise.
    ///
    /// Uses constructor metadata when present; otherwise it is read off the
    /// element-order census, which determines a finite abelian group up to
    /// isomorphism.
    pub fn abelian_shape(&self) -> Option<AbelianShape> {
        if let Some(shape) = &self.shape {
            return Some(shape.clone());
        }
        if !self.is_abelian() {
            return None;
        }
        Some(AbelianShape::from_order_census(
            self.order as u64,
            &self.elem_order,
        ))
    }

    /// Cyclic-factor coordinates recorded at construction time, if any.
    pub fn presentation(&self) -> Option<&CyclicPresentation> {
        self.presentation.as_ref()
    }

    /// A cyclic-factor presentation for any abelian group.
    ///
    /// Groups without constructor metadata are matched against the canonical
    /// product of their abelian shape by isomorphism search.
    pub fn cyclic_presentation(&self) -> Option<CyclicPresentation> {
        if let Some(p) = &self.presentation {
            return Some(p.clone());
        }
        let shape = self.abelian_shape()?;
        let model = make_abelian_capped(&shape, usize::MAX).ok()?;
        // model element r (mixed radix index r) -> element of self
        let iso = find_isomorphism(&model, self)?;
        Some(CyclicPresentation::relabeled(
            shape.cyclic_moduli(),
            iso,
        ))
    }
}

impl PartialEq for Group {
    /// Equality of Cayley tables (same labelled group), ignoring descriptors.
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for Group {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tables() {
        assert!(Group::from_table(2, vec![0, 1, 1], "x", "x", serde_json::Value::Null).is_err());
        // identity not at 0
        assert!(
            Group::from_table(2, vec![1, 0, 0, 1], "x", "x", serde_json::Value::Null).is_err()
        );
        assert!(
            Group::from_table(2, vec![0, 1, 1, 1], "x", "x", serde_json::Value::Null).is_err()
        );
    }

    #[test]
    fn latin_but_not_associative() {
        // A loop of order 5 that is not a group.
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let g = Group::from_table(5, t, "loop", "loop", serde_json::Value::Null).unwrap();
        assert_eq!(g.validate_axioms(64), Ok(false));
        assert!(matches!(g.validate_axioms(4), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn cyclic_orders_and_power() {
        let g = make_cyclic(6);
        assert_eq!(g.elem_orders(), &[1, 6, 3, 2, 3, 6]);
        // exactly one element of order 2, found by powering
        let involutions: Vec<_> = g
            .elements()
            .filter(|&a| a != IDENTITY && g.op(a, a) == IDENTITY)
            .collect();
        assert_eq!(involutions, vec![3]);
        assert_eq!(g.power(2, 4), 2);
        let t = make_cyclic(1);
        assert_eq!(t.order(), 1);
        assert_eq!(t.elem_orders(), &[1]);
    }

    #[test]
    fn center_and_centralizer() {
        let z6 = make_cyclic(6);
        assert_eq!(z6.center().len(), 6);
        assert!(z6.is_abelian());
        assert_eq!(z6.centralizer(4).len(), 6);

        let q8 = make_quaternion();
        assert_eq!(q8.center().len(), 2);
        assert!(!q8.is_abelian());
        assert_eq!(q8.centralizer(IDENTITY).len(), 8);

        let d4 = make_dihedral(4).unwrap();
        assert_eq!(d4.center().len(), 2);

        let s4 = make_symmetric(4).unwrap();
        let transposition = s4
            .elements()
            .find(|&a| s4.elem_order(a) == 2 && s4.centralizer(a).len() == 4)
            .expect("a transposition");
        assert_eq!(s4.centralizer_index(transposition), 6);
        for a in s4.elements() {
            let c = s4.centralizer(a);
            assert!(c.contains(&IDENTITY) && c.contains(&a));
        }
    }

    #[test]
    fn shapes_from_census() {
        let z6 = make_cyclic(6);
        assert_eq!(z6.abelian_shape().unwrap().to_string(), "Z2 x Z3");
        assert_eq!(
            z6.abelian_shape().unwrap(),
            AbelianShape::parse("2x3").unwrap()
        );
        let klein = make_direct_product(&make_cyclic(2), &make_cyclic(2)).unwrap();
        assert_eq!(klein.abelian_shape(), Some(AbelianShape::parse("2x2").unwrap()));
        let z4 = make_cyclic(4);
        assert_eq!(z4.abelian_shape(), Some(AbelianShape::parse("2^2").unwrap()));
        assert_ne!(z4.abelian_shape(), klein.abelian_shape());
        assert_eq!(make_quaternion().abelian_shape(), None);
    }

    #[test]
    fn presentations_round_trip() {
        let g = make_abelian(&AbelianShape::parse("2^3x2").unwrap()).unwrap();
        let p = g.presentation().unwrap();
        assert_eq!(p.moduli(), &[8, 2]);
        for x in g.elements() {
            assert_eq!(p.element(p.coords(x)), x);
        }
        // a catalog group without metadata gets one by isomorphism
        let cat = catalog_groups_up_to(12).unwrap();
        let z6z2 = cat.iter().find(|g| g.name() == "Z6xZ2").unwrap();
        assert!(z6z2.presentation().is_none());
        let p = z6z2.cyclic_presentation().unwrap();
        assert_eq!(p.moduli(), &[2, 2, 3]);
        for x in z6z2.elements() {
            for y in z6z2.elements() {
                let sum: Vec<u64> = p
                    .coords(x)
                    .iter()
                    .zip(p.coords(y))
                    .zip(p.moduli())
                    .map(|((a, b), d)| (a + b) % d)
                    .collect();
                assert_eq!(p.element(&sum), z6z2.op(x, y));
            }
        }
    }
}

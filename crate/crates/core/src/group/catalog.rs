use serde_json::json;

use super::{make_from_permutation_generators, perm_from_cycles, Group, Permutation};
use crate::error::{Error, Result};

/// Largest order covered by the catalog.
pub const CATALOG_MAX_ORDER: usize = 15;

type Cycles = &'static [&'static [usize]];

/// One isomorphism class of the catalog, given by permutation generators.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub order: usize,
    /// 1-based position among the catalog groups of the same order.
    pub index: usize,
    pub name: &'static str,
    pub family: &'static str,
    pub degree: usize,
    generators: &'static [Cycles],
}

impl CatalogEntry {
    /// Selector string, e.g. `catalog:8.5`.
    pub fn selector(&self) -> String {
        format!("catalog:{}.{}", self.order, self.index)
    }

    pub fn generators(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|cycles| perm_from_cycles(self.degree, cycles))
            .collect()
    }

    pub fn build(&self) -> Result<Group> {
        let gens = self.generators()?;
        let g = make_from_permutation_generators(self.degree, &gens)?;
        if g.order() != self.order {
            return Err(Error::Unsupported(format!(
                "catalog entry {} closes to order {}",
                self.name,
                g.order()
            )));
        }
        Ok(g.renamed(
            self.name,
            self.family,
            json!({ "catalog": format!("{}.{}", self.order, self.index), "degree": self.degree, "generators": gens }),
        ))
    }
}

macro_rules! entry {
    ($order:expr, $index:expr, $name:expr, $family:expr, $degree:expr, [$($gen:expr),* $(,)?]) => {
        CatalogEntry {
            order: $order,
            index: $index,
            name: $name,
            family: $family,
            degree: $degree,
            generators: &[$($gen),*],
        }
    };
}

const CATALOG: &[CatalogEntry] = &[
    entry!(1, 1, "Z1", "cyclic", 1, []),
    entry!(2, 1, "Z2", "cyclic", 2, [&[&[0, 1]]]),
    entry!(3, 1, "Z3", "cyclic", 3, [&[&[0, 1, 2]]]),
    entry!(4, 1, "Z4", "cyclic", 4, [&[&[0, 1, 2, 3]]]),
    entry!(4, 2, "Z2xZ2", "abelian", 4, [&[&[0, 1]], &[&[2, 3]]]),
    entry!(5, 1, "Z5", "cyclic", 5, [&[&[0, 1, 2, 3, 4]]]),
    entry!(6, 1, "Z6", "cyclic", 5, [&[&[0, 1, 2], &[3, 4]]]),
    entry!(6, 2, "S3", "symmetric", 3, [&[&[0, 1, 2]], &[&[0, 1]]]),
    entry!(7, 1, "Z7", "cyclic", 7, [&[&[0, 1, 2, 3, 4, 5, 6]]]),
    entry!(8, 1, "Z8", "cyclic", 8, [&[&[0, 1, 2, 3, 4, 5, 6, 7]]]),
    entry!(8, 2, "Z4xZ2", "abelian", 6, [&[&[0, 1, 2, 3]], &[&[4, 5]]]),
    entry!(8, 3, "Z2xZ2xZ2", "abelian", 6, [&[&[0, 1]], &[&[2, 3]], &[&[4, 5]]]),
    entry!(8, 4, "D4", "dihedral", 4, [&[&[0, 1, 2, 3]], &[&[1, 3]]]),
    // left-regular action of i and j on 1, -1, i, -i, j, -j, k, -k
    entry!(8, 5, "Q8", "quaternion", 8, [&[&[0, 2, 1, 3], &[4, 6, 5, 7]], &[&[0, 4, 1, 5], &[2, 7, 3, 6]]]),
    entry!(9, 1, "Z9", "cyclic", 9, [&[&[0, 1, 2, 3, 4, 5, 6, 7, 8]]]),
    entry!(9, 2, "Z3xZ3", "abelian", 6, [&[&[0, 1, 2]], &[&[3, 4, 5]]]),
    entry!(10, 1, "Z10", "cyclic", 7, [&[&[0, 1], &[2, 3, 4, 5, 6]]]),
    entry!(10, 2, "D5", "dihedral", 5, [&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]]),
    entry!(11, 1, "Z11", "cyclic", 11, [&[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]]),
    entry!(12, 1, "Z12", "cyclic", 7, [&[&[0, 1, 2, 3], &[4, 5, 6]]]),
    entry!(12, 2, "Z6xZ2", "abelian", 7, [&[&[0, 1]], &[&[2, 3]], &[&[4, 5, 6]]]),
    entry!(12, 3, "A4", "alternating", 4, [&[&[0, 1, 2]], &[&[1, 2, 3]]]),
    entry!(12, 4, "D6", "dihedral", 6, [&[&[0, 1, 2, 3, 4, 5]], &[&[1, 5], &[2, 4]]]),
    entry!(12, 5, "Dic3", "dicyclic", 7, [&[&[0, 1, 2]], &[&[1, 2], &[3, 4, 5, 6]]]),
    entry!(13, 1, "Z13", "cyclic", 13, [&[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]]]),
    entry!(14, 1, "Z14", "cyclic", 9, [&[&[0, 1], &[2, 3, 4, 5, 6, 7, 8]]]),
    entry!(14, 2, "D7", "dihedral", 7, [&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 6], &[2, 5], &[3, 4]]]),
    entry!(15, 1, "Z15", "cyclic", 8, [&[&[0, 1, 2], &[3, 4, 5, 6, 7]]]),
];

/// Catalog entries of order at most `max_order`.
pub fn catalog_entries(max_order: usize) -> Result<&'static [CatalogEntry]> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "catalog covers orders up to {CATALOG_MAX_ORDER}, requested {max_order}"
        )));
    }
    let end = CATALOG.partition_point(|e| e.order <= max_order);
    Ok(&CATALOG[..end])
}

/// One representative of every isomorphism class of order `<= max_order`.
pub fn catalog_groups_up_to(max_order: usize) -> Result<Vec<Group>> {
    catalog_entries(max_order)?.iter().map(CatalogEntry::build).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{are_isomorphic_groups, make_quaternion, make_dihedral, DEFAULT_AXIOM_SCAN_CAP};

    #[test]
    fn class_counts_per_order() {
        let groups = catalog_groups_up_to(CATALOG_MAX_ORDER).unwrap();
        assert_eq!(groups.len(), 28);
        let mut counts = [0usize; 15];
        for g in &groups {
            counts[g.order() - 1] += 1;
        }
        assert_eq!(counts, [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1]);
        for g in &groups {
            assert_eq!(g.validate_axioms(DEFAULT_AXIOM_SCAN_CAP), Ok(true), "{}", g.name());
        }
    }

    #[test]
    fn pairwise_non_isomorphic() {
        let groups = catalog_groups_up_to(CATALOG_MAX_ORDER).unwrap();
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                assert!(!are_isomorphic_groups(a, b), "{} ~ {}", a.name(), b.name());
            }
        }
    }

    #[test]
    fn small_prefixes() {
        assert_eq!(catalog_groups_up_to(1).unwrap().len(), 1);
        assert_eq!(catalog_groups_up_to(4).unwrap().len(), 5);
        assert!(catalog_groups_up_to(16).is_err());
        let eight = catalog_groups_up_to(8).unwrap();
        let q8 = make_quaternion();
        let d4 = make_dihedral(4).unwrap();
        assert!(eight.iter().any(|g| are_isomorphic_groups(g, &q8)));
        assert!(eight.iter().any(|g| are_isomorphic_groups(g, &d4)));
    }

    #[test]
    fn names_match_structure() {
        for g in catalog_groups_up_to(CATALOG_MAX_ORDER).unwrap() {
            let cyclic = g.elements().any(|a| g.elem_order(a) == g.order());
            assert_eq!(g.name().starts_with('Z') && !g.name().contains('x'), cyclic, "{}", g.name());
            let abelian = ["cyclic", "abelian"].contains(&g.descriptor().family.as_str());
            assert_eq!(g.is_abelian(), abelian, "{}", g.name());
        }
    }
}

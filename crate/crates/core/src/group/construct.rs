use std::collections::HashMap;

use serde_json::json;

use super::{AbelianShape, CyclicPresentation, ElementId, Group};
use crate::error::{Error, Result};

/// Default upper bound on the order of constructed groups.
pub const DEFAULT_ORDER_CAP: usize = 128;

/// A permutation of `0..degree`, `p[i]` is the image of `i`.
pub type Permutation = Vec<usize>;

/// The cyclic group `Z_n` under addition mod `n`; element `k` is the residue `k`.
///
/// # Panics
/// If `n == 0`.
pub fn make_cyclic(n: usize) -> Group {
    assert!(n >= 1, "cyclic group of order 0");
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let shape = AbelianShape::from_cyclic_orders(&[n as u64]).expect("n >= 1");
    Group::from_table(n, table, format!("Z{n}"), "cyclic", json!({ "n": n }))
        .expect("addition mod n is a group")
        .with_abelian_metadata(
            Some(shape),
            Some(CyclicPresentation::mixed_radix(vec![n as u64])),
        )
}

pub fn make_abelian(shape: &AbelianShape) -> Result<Group> {
    make_abelian_capped(shape, DEFAULT_ORDER_CAP)
}

/// Direct product of the cyclic factors of `shape`, in canonical factor order.
///
/// Element `i` has the mixed-radix digits of `i` as coordinates, so the
/// zero vector is element 0.
pub fn make_abelian_capped(shape: &AbelianShape, cap: usize) -> Result<Group> {
    let order = shape.order();
    if order > cap as u64 {
        return Err(Error::SizeCap {
            order: order.min(usize::MAX as u64) as usize,
            cap,
        });
    }
    let n = order as usize;
    let presentation = CyclicPresentation::mixed_radix(shape.cyclic_moduli());
    let mut table = Vec::with_capacity(n * n);
    let mut sum = vec![0u64; presentation.moduli().len()];
    for a in 0..n {
        for b in 0..n {
            for (j, slot) in sum.iter_mut().enumerate() {
                *slot = presentation.coords(a)[j] + presentation.coords(b)[j];
            }
            table.push(presentation.element(&sum));
        }
    }
    let g = Group::from_table(
        n,
        table,
        shape.to_string(),
        "abelian",
        json!({ "shape": shape.selector() }),
    )?;
    Ok(g.with_abelian_metadata(Some(shape.clone()), Some(presentation)))
}

pub fn make_direct_product(g1: &Group, g2: &Group) -> Result<Group> {
    make_direct_product_capped(g1, g2, DEFAULT_ORDER_CAP)
}

/// `g1 x g2` with element `(a, b)` stored at index `a * |g2| + b`.
pub fn make_direct_product_capped(g1: &Group, g2: &Group, cap: usize) -> Result<Group> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1
        .checked_mul(n2)
        .filter(|&n| n <= cap)
        .ok_or(Error::SizeCap {
            order: n1.saturating_mul(n2),
            cap,
        })?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (a1, a2) = (a / n2, a % n2);
            let (b1, b2) = (b / n2, b % n2);
            table.push(g1.op(a1, b1) * n2 + g2.op(a2, b2));
        }
    }
    let name = format!("{}x{}", g1.name(), g2.name());
    let g = Group::from_table(
        n,
        table,
        name,
        "direct-product",
        json!({ "left": g1.descriptor(), "right": g2.descriptor() }),
    )?;
    let shape = match (&g1.shape, &g2.shape) {
        (Some(s1), Some(s2)) => Some(
            AbelianShape::new(
                s1.factors()
                    .iter()
                    .chain(s2.factors())
                    .map(|f| (f.prime, f.exponent, f.multiplicity)),
            )
            .expect("factors of valid shapes"),
        ),
        _ => None,
    };
    let presentation = match (g1.presentation(), g2.presentation()) {
        (Some(p1), Some(p2)) => {
            let moduli: Vec<u64> = p1.moduli().iter().chain(p2.moduli()).copied().collect();
            let elements = (0..n)
                .map(|r| p1.by_radix[r / n2] * n2 + p2.by_radix[r % n2])
                .collect();
            Some(CyclicPresentation::relabeled(moduli, elements))
        }
        _ => None,
    };
    Ok(g.with_abelian_metadata(shape, presentation))
}

/// Builds a permutation of `0..degree` from disjoint cycles.
pub fn perm_from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Permutation> {
    let mut p: Permutation = (0..degree).collect();
    let mut touched = vec![false; degree];
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            if x >= degree || touched[x] {
                return Err(Error::InvalidPermutation(format!(
                    "cycle {cycle:?} repeats or exceeds degree {degree}"
                )));
            }
            touched[x] = true;
            p[x] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(p)
}

pub fn make_from_permutation_generators(degree: usize, gens: &[Permutation]) -> Result<Group> {
    make_from_permutation_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
}

/// Closure of `gens` under composition, relabeled so the identity is element 0
/// and further elements appear in breadth-first order.
///
/// The product `p * q` applies `q` first, then `p`.
pub fn make_from_permutation_generators_capped(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<Group> {
    for g in gens {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidPermutation(format!(
                "{g:?} is not a permutation of 0..{degree}"
            )));
        }
    }
    let compose = |p: &Permutation, q: &Permutation| -> Permutation { q.iter().map(|&x| p[x]).collect() };
    let identity: Permutation = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Permutation, ElementId> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in gens {
            let next = compose(&elements[head], g);
            if !index.contains_key(&next) {
                if elements.len() == cap {
                    return Err(Error::SizeCap {
                        order: cap + 1,
                        cap,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&compose(a, b)]);
        }
    }
    Group::from_table(
        n,
        table,
        format!("perm-group-{n}"),
        "permutation",
        json!({ "degree": degree, "generators": gens }),
    )
}

/// The quaternion group of order 8.
///
/// Elements: `0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k`.
pub fn make_quaternion() -> Group {
    // unit products among 1, i, j, k as (negated, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (neg, unit) = UNIT[a / 2][b / 2];
            let negative = neg ^ (a % 2 == 1) ^ (b % 2 == 1);
            table.push(unit * 2 + negative as usize);
        }
    }
    Group::from_table(8, table, "Q8", "quaternion", json!({}))
        .expect("quaternion multiplication is a group")
}

/// Symmetry group of the regular `m`-gon, order `2m`, for `m >= 3`.
pub fn make_dihedral(m: usize) -> Result<Group> {
    if m < 3 {
        return Err(Error::Unsupported(format!(
            "dihedral group of the {m}-gon; use the abelian constructors for orders 2 and 4"
        )));
    }
    let rotation: Permutation = (0..m).map(|i| (i + 1) % m).collect();
    let reflection: Permutation = (0..m).map(|i| (m - i) % m).collect();
    Ok(make_from_permutation_generators(m, &[rotation, reflection])?
        .renamed(&format!("D{m}"), "dihedral", json!({ "m": m })))
}

/// Symmetric group on `degree` points.
pub fn make_symmetric(degree: usize) -> Result<Group> {
    let gens = if degree < 2 {
        vec![]
    } else {
        vec![
            (0..degree).map(|i| (i + 1) % degree).collect(),
            perm_from_cycles(degree, &[&[0, 1]])?,
        ]
    };
    Ok(make_from_permutation_generators(degree, &gens)?.renamed(
        &format!("S{degree}"),
        "symmetric",
        json!({ "degree": degree }),
    ))
}

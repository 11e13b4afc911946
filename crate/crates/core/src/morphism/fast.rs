//! Closed-form arc test for abelian groups.
//!
//! A homomorphism `Z_{d_1} x ... x Z_{d_k} -> itself` is a matrix of
//! coordinate maps `Z_{d_i} -> Z_{d_j}`, and such a map is multiplication by
//! any multiple of `t_ij = d_j / gcd(d_i, d_j)`, chosen independently per
//! entry. So `b` is reachable from `a` iff for every `j`, `b_j` lies in the
//! subgroup of `Z_{d_j}` generated by `{ t_ij * a_i }`, i.e. iff
//! `gcd(d_j, t_1j a_1, ..., t_kj a_k)` divides `b_j`.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::{AbelianShape, ElementId, Group};

/// Arc test on coordinate vectors of `Z_{d_1} x ... x Z_{d_k}`.
///
/// # Panics
/// If the three slices differ in length.
pub fn cyclic_product_arc(moduli: &[u64], a: &[u64], b: &[u64]) -> bool {
    assert!(moduli.len() == a.len() && a.len() == b.len(), "coordinate arity");
    moduli.iter().enumerate().all(|(j, &dj)| {
        let generator = moduli
            .iter()
            .zip(a)
            .fold(dj, |acc, (&di, &ai)| {
                let t = dj / gcd(di, dj);
                gcd(acc, (t % dj) * (ai % dj) % dj)
            });
        (b[j] % dj) % generator == 0
    })
}

/// Arc test on coordinates of the canonical product for `shape`.
pub fn abelian_arc_fast(shape: &AbelianShape, a: &[u64], b: &[u64]) -> Result<bool> {
    let moduli = shape.cyclic_moduli();
    for v in [a, b] {
        if v.len() != moduli.len() {
            return Err(Error::LengthMismatch {
                expected: moduli.len(),
                got: v.len(),
            });
        }
    }
    Ok(cyclic_product_arc(&moduli, a, b))
}

/// Arc test on elements of an abelian group that carries a cyclic-factor
/// presentation.
pub fn presented_arc(g: &Group, a: ElementId, b: ElementId) -> Result<bool> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let p = g
        .presentation()
        .ok_or_else(|| Error::Unsupported("group has no cyclic-factor presentation".into()))?;
    Ok(cyclic_product_arc(p.moduli(), p.coords(a), p.coords(b)))
}

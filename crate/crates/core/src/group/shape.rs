use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, partitions};
use crate::error::{Error, Result};

/// `multiplicity` copies of the cyclic group of order `prime^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeFactor {
    pub prime: u64,
    pub exponent: u32,
    pub multiplicity: u32,
}

impl ShapeFactor {
    pub fn modulus(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// Primary decomposition of a finite abelian group.
///
/// Factors are kept sorted by ascending prime, then descending exponent,
/// with equal `(prime, exponent)` pairs merged. Two groups are isomorphic
/// exactly when their shapes are equal. The empty shape is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianShape {
    factors: Vec<ShapeFactor>,
}

impl AbelianShape {
    pub fn new(factors: impl IntoIterator<Item = (u64, u32, u32)>) -> Result<Self> {
        let mut out: Vec<ShapeFactor> = Vec::new();
        for (prime, exponent, multiplicity) in factors {
            if !is_prime(prime) {
                return Err(Error::InvalidShape(format!("{prime} is not prime")));
            }
            if exponent == 0 || multiplicity == 0 {
                return Err(Error::InvalidShape(format!(
                    "factor ({prime},{exponent},{multiplicity}) needs exponent and multiplicity >= 1"
                )));
            }
            out.push(ShapeFactor {
                prime,
                exponent,
                multiplicity,
            });
        }
        Ok(Self::canonical(out))
    }

    fn canonical(mut factors: Vec<ShapeFactor>) -> Self {
        factors.sort_by(|a, b| a.prime.cmp(&b.prime).then(b.exponent.cmp(&a.exponent)));
        let mut merged: Vec<ShapeFactor> = Vec::with_capacity(factors.len());
        for f in factors {
            match merged.last_mut() {
                Some(last) if last.prime == f.prime && last.exponent == f.exponent => {
                    last.multiplicity += f.multiplicity
                }
                _ => merged.push(f),
            }
        }
        Self { factors: merged }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// Shape of a product of cyclic groups of arbitrary orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidShape("cyclic factor of order 0".into()));
        }
        Ok(Self::canonical(
            orders
                .iter()
                .flat_map(|&d| factorize(d))
                .map(|(prime, exponent)| ShapeFactor {
                    prime,
                    exponent,
                    multiplicity: 1,
                })
                .collect(),
        ))
    }

    /// Parses `x`-separated cyclic factors such as `2^3x2` or `4x3x3`.
    ///
    /// Each factor is `p^a` or a plain positive integer (which is split into
    /// its prime-power parts). `1` alone denotes the trivial group.
    pub fn parse(text: &str) -> Result<Self> {
        let mut orders = Vec::new();
        for part in text.split('x') {
            let part = part.trim();
            let order = match part.split_once('^') {
                Some((base, exp)) => {
                    let base: u64 = base
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad factor base in {part:?}")))?;
                    let exp: u32 = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?;
                    if !is_prime(base) || exp == 0 {
                        return Err(Error::Parse(format!(
                            "factor {part:?} must be p^a with p prime and a >= 1"
                        )));
                    }
                    base.checked_pow(exp)
                        .ok_or_else(|| Error::Parse(format!("factor {part:?} overflows")))?
                }
                None => part
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cyclic factor {part:?}")))?,
            };
            if order == 0 {
                return Err(Error::Parse("cyclic factor of order 0".into()));
            }
            orders.push(order);
        }
        Self::from_cyclic_orders(&orders)
    }

    /// Recovers the shape of an abelian group from its element orders.
    ///
    /// For each prime `p`, the number of elements whose order divides `p^k`
    /// is `p^(sum_i min(lambda_i, k))`, which pins down the partition `lambda`.
    pub(crate) fn from_order_census(group_order: u64, elem_orders: &[usize]) -> Self {
        let mut factors = Vec::new();
        for (p, e) in factorize(group_order) {
            // s[k] = sum_i min(lambda_i, k)
            let mut s = vec![0u32; e as usize + 2];
            for (k, slot) in s.iter_mut().enumerate().skip(1) {
                let bound = p.pow(k.min(e as usize) as u32);
                let count = elem_orders
                    .iter()
                    .filter(|&&o| bound % o as u64 == 0)
                    .count() as u64;
                *slot = count.ilog(p);
            }
            // at_least[k] = #{ i : lambda_i >= k }
            let at_least = |k: usize| s[k] - s[k - 1];
            for k in 1..=e as usize {
                let next = if k < e as usize { at_least(k + 1) } else { 0 };
                let mult = at_least(k) - next;
                if mult > 0 {
                    factors.push(ShapeFactor {
                        prime: p,
                        exponent: k as u32,
                        multiplicity: mult,
                    });
                }
            }
        }
        Self::canonical(factors)
    }

    pub fn factors(&self) -> &[ShapeFactor] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.modulus().pow(f.multiplicity))
            .product()
    }

    /// Moduli of the individual cyclic factors in canonical order.
    pub fn cyclic_moduli(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.modulus(), f.multiplicity as usize))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.factors.iter().map(|f| f.prime).collect();
        ps.dedup();
        ps
    }

    /// `(Z_p)^k` with `k >= 1`.
    pub fn is_elementary(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].exponent == 1
    }

    /// Selector form accepted by [`AbelianShape::parse`], e.g. `2^3x2`.
    pub fn selector(&self) -> String {
        if self.is_trivial() {
            return "1".into();
        }
        self.cyclic_moduli()
            .iter()
            .map(|&d| {
                let (p, e) = factorize(d)[0];
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Every abelian shape of order `n`, from per-prime exponent partitions.
    pub fn all_of_order(n: u64) -> Vec<Self> {
        let mut shapes = vec![Vec::<ShapeFactor>::new()];
        for (p, e) in factorize(n) {
            let mut next = Vec::new();
            for prefix in &shapes {
                for part in partitions(e) {
                    let mut factors = prefix.clone();
                    factors.extend(part.iter().map(|&a| ShapeFactor {
                        prime: p,
                        exponent: a,
                        multiplicity: 1,
                    }));
                    next.push(factors);
                }
            }
            shapes = next;
        }
        shapes.into_iter().map(Self::canonical).collect()
    }

    /// Every abelian shape of order `1..=max_order`, grouped by order.
    pub fn all_up_to(max_order: u64) -> Vec<Self> {
        (1..=max_order).flat_map(Self::all_of_order).collect()
    }
}

impl fmt::Display for AbelianShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| {
                if fac.multiplicity == 1 {
                    format!("Z{}", fac.modulus())
                } else {
                    format!("Z{}^{}", fac.modulus(), fac.multiplicity)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_merge() {
        let s = AbelianShape::new([(2, 1, 1), (2, 3, 1)]).unwrap();
        assert_eq!(s.cyclic_moduli(), vec![8, 2]);
        let klein = AbelianShape::new([(2, 1, 1), (2, 1, 1)]).unwrap();
        assert_eq!(klein, AbelianShape::new([(2, 1, 2)]).unwrap());
        assert_eq!(klein.order(), 4);
        assert_eq!(klein.to_string(), "Z2^2");
        assert_eq!(s.selector(), "2^3x2");
        assert!(AbelianShape::new([(4, 1, 1)]).is_err());
        assert!(AbelianShape::new([(2, 0, 1)]).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(
            AbelianShape::parse("6").unwrap(),
            AbelianShape::new([(2, 1, 1), (3, 1, 1)]).unwrap()
        );
        assert_eq!(AbelianShape::parse("1").unwrap(), AbelianShape::trivial());
        assert_eq!(AbelianShape::parse("2^2x3x3").unwrap().order(), 36);
        assert!(AbelianShape::parse("4^2").is_err());
        assert!(AbelianShape::parse("0").is_err());
        assert!(AbelianShape::parse("2^x").is_err());
    }

    #[test]
    fn counts_of_abelian_groups() {
        // number of abelian groups of order n, n = 1..=32
        let expected = [
            1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5, 1, 2, 1, 2, 1, 1, 1, 3, 2, 1, 3, 2,
            1, 1, 1, 7,
        ];
        for (i, &e) in expected.iter().enumerate() {
            let n = i as u64 + 1;
            let shapes = AbelianShape::all_of_order(n);
            assert_eq!(shapes.len(), e, "order {n}");
            assert!(shapes.iter().all(|s| s.order() == n));
        }
    }
}

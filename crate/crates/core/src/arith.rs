//! Elementary number theory on small naturals: factorization, divisors,
//! Euler's totient and integer partitions.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// Prime factorization as `(prime, exponent)` pairs with ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// All divisors of `n` in ascending order, including 1 and `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The divisors of `n` strictly between 1 and `n`, with their totients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorProfile {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub phi_values: Vec<u64>,
}

pub fn divisor_profile(n: u64) -> DivisorProfile {
    let divisors: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&d| d > 1 && d < n)
        .collect();
    let phi_values = divisors.iter().map(|&d| euler_phi(d)).collect();
    DivisorProfile {
        n,
        divisors,
        phi_values,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Integer partitions of `n` as non-increasing part lists, in reverse
/// lexicographic order (`[n]` first, `[1, 1, ..]` last).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_phi() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        // coprime residue count
        for n in 1..200u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), brute, "phi({n})");
        }
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn divisor_profile_of_six_and_primes() {
        let p = divisor_profile(6);
        assert_eq!(p.divisors, vec![2, 3]);
        assert_eq!(p.phi_values, vec![1, 2]);
        assert!(divisor_profile(13).divisors.is_empty());
        assert!(divisor_profile(1).divisors.is_empty());
        for n in 1..100u64 {
            let brute: Vec<u64> = (2..n).filter(|d| n % d == 0).collect();
            assert_eq!(divisor_profile(n).divisors, brute);
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(60, 2), 1770);
        assert_eq!(binomial(3, 5), 0);
    }
}

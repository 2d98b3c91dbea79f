//! Small integer helpers shared by the group and field code.

use std::collections::BTreeSet;

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if n == 0 {
        return 0;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn euler_phi(n: u64) -> u64 {
    prime_divisors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

pub fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

pub fn mod_inverse(a: u64, q: u64) -> u64 {
    // q prime
    mod_pow(a % q, q - 2, q)
}

/// A set of primes given either explicitly or as the complement of a finite set.
///
/// Speciality is only ever asked about `{p}` and its complement `p'`, which is
/// why both shapes are first-class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeSet {
    Only(BTreeSet<u64>),
    AllExcept(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn only(p: u64) -> Self {
        PrimeSet::Only(BTreeSet::from([p]))
    }

    pub fn excluding(p: u64) -> Self {
        PrimeSet::AllExcept(BTreeSet::from([p]))
    }

    pub fn contains(&self, q: u64) -> bool {
        match self {
            PrimeSet::Only(s) => s.contains(&q),
            PrimeSet::AllExcept(s) => !s.contains(&q),
        }
    }

    /// True when every prime divisor of `n` lies in the set.
    pub fn is_pi_number(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|q| self.contains(q))
    }

    pub fn complement(&self) -> Self {
        match self {
            PrimeSet::Only(s) => PrimeSet::AllExcept(s.clone()),
            PrimeSet::AllExcept(s) => PrimeSet::Only(s.clone()),
        }
    }
}

impl std::fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Only(s) => write!(f, "{{{}}}", list(s)),
            PrimeSet::AllExcept(s) => write!(f, "{{{}}}'", list(s)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_and_divisors() {
        assert_eq!(prime_divisors(48), vec![2, 3]);
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(p_prime_part(48, 3), 16);
        assert_eq!(euler_phi(24), 8);
        assert!(is_power_of(27, 3));
        assert!(!is_power_of(12, 2));
        assert!(is_power_of(1, 5));
    }

    #[test]
    fn prime_sets() {
        let three = PrimeSet::only(3);
        let not_three = three.complement();
        assert!(three.is_pi_number(9));
        assert!(three.is_pi_number(1));
        assert!(!three.is_pi_number(6));
        assert!(not_three.is_pi_number(8));
        assert!(!not_three.is_pi_number(24));
    }

    #[test]
    fn modular() {
        assert_eq!(mod_pow(5, 3, 193), 125);
        assert_eq!(mod_inverse(5, 193) * 5 % 193, 1);
    }
}

//! Built-in corpus of small groups.

use crate::error::Result;
use crate::numtheory::prime_divisors;
use crate::permgroup::{parse_cycles, Group, GroupRef};

/// Values every run must reproduce exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub order: usize,
    pub class_count: usize,
    /// `(p, |IBr_p(G)|)`.
    pub ibr_counts: Vec<(u64, usize)>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub group: GroupRef,
    /// Odd primes dividing the order, then any extras (2 for even order).
    pub primes: Vec<u64>,
    pub expected: Expected,
    pub note: Option<&'static str>,
}

struct Spec {
    name: &'static str,
    degree: usize,
    gens: &'static [&'static str],
    class_count: usize,
    ibr: &'static [(u64, usize)],
    note: Option<&'static str>,
}

const SPECS: &[Spec] = &[
    Spec {
        name: "C1",
        degree: 1,
        gens: &[],
        class_count: 1,
        ibr: &[],
        note: None,
    },
    Spec {
        name: "C2",
        degree: 2,
        gens: &["(1,2)"],
        class_count: 2,
        ibr: &[(2, 1)],
        note: None,
    },
    Spec {
        name: "C3",
        degree: 3,
        gens: &["(1,2,3)"],
        class_count: 3,
        ibr: &[(3, 1)],
        note: Some("equality case |L_phi| = |Q:Q'| = 3"),
    },
    Spec {
        name: "C6",
        degree: 6,
        gens: &["(1,2,3,4,5,6)"],
        class_count: 6,
        ibr: &[(3, 2), (2, 3)],
        note: None,
    },
    Spec {
        name: "S3",
        degree: 3,
        gens: &["(1,2)", "(1,2,3)"],
        class_count: 3,
        ibr: &[(3, 2), (2, 2)],
        note: None,
    },
    Spec {
        name: "D4",
        degree: 4,
        gens: &["(1,2,3,4)", "(1,3)"],
        class_count: 5,
        ibr: &[(2, 1)],
        note: None,
    },
    Spec {
        name: "Q8",
        degree: 8,
        gens: &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"],
        class_count: 5,
        ibr: &[(2, 1)],
        note: None,
    },
    Spec {
        name: "A4",
        degree: 4,
        gens: &["(1,2,3)", "(1,2)(3,4)"],
        class_count: 4,
        ibr: &[(3, 2), (2, 3)],
        note: None,
    },
    Spec {
        name: "D6",
        degree: 6,
        gens: &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"],
        class_count: 6,
        ibr: &[(3, 4), (2, 2)],
        note: None,
    },
    Spec {
        name: "F21",
        degree: 7,
        gens: &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"],
        class_count: 5,
        ibr: &[(3, 3), (7, 3)],
        note: Some("C7:C3, non-normal Sylow 3-subgroup; Corollary B with K = C7"),
    },
    Spec {
        name: "SL23",
        degree: 8,
        gens: &["(3,4,5)(6,8,7)", "(1,3,2,6)(4,5,8,7)"],
        class_count: 7,
        ibr: &[(3, 3), (2, 3)],
        note: None,
    },
    Spec {
        name: "S4",
        degree: 4,
        gens: &["(1,2,3,4)", "(1,2)"],
        class_count: 5,
        ibr: &[(3, 4), (2, 2)],
        note: None,
    },
    Spec {
        name: "GL23",
        degree: 8,
        gens: &["(1,3)(2,6)(5,7)", "(1,4,5,6,2,8,7,3)"],
        class_count: 8,
        ibr: &[(3, 6), (2, 2)],
        note: Some("worked example: p = 3, K = O_2(G) = Q8, KQ = SL(2,3)"),
    },
];

/// Groups that are deliberately not p-solvable, kept apart from the corpus.
const REJECTION_SPECS: &[(&str, usize, &[&str], u64)] = &[("A5", 5, &["(1,2,3,4,5)", "(1,2,3)"], 5)];

fn build(degree: usize, gens: &[&str]) -> Result<GroupRef> {
    let perms = gens
        .iter()
        .map(|g| parse_cycles(degree, g))
        .collect::<Result<Vec<_>>>()?;
    Group::from_generators(degree, &perms)
}

fn default_primes(order: usize) -> Vec<u64> {
    let divisors = prime_divisors(order as u64);
    let mut primes: Vec<u64> = divisors.iter().copied().filter(|&p| p != 2).collect();
    if divisors.contains(&2) {
        primes.push(2);
    }
    primes
}

/// The corpus, in increasing order of group order.
pub fn corpus_catalog() -> Vec<CorpusEntry> {
    SPECS
        .iter()
        .map(|s| {
            let group = build(s.degree, s.gens).expect("corpus generators are valid");
            CorpusEntry {
                name: s.name,
                primes: default_primes(group.order()),
                expected: Expected {
                    order: group.order(),
                    class_count: s.class_count,
                    ibr_counts: s.ibr.to_vec(),
                },
                group,
                note: s.note,
            }
        })
        .collect()
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus_catalog().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

/// `(name, group, p)` for groups that must be refused as not p-solvable.
pub fn rejection_catalog() -> Vec<(&'static str, GroupRef, u64)> {
    REJECTION_SPECS
        .iter()
        .map(|&(name, degree, gens, p)| (name, build(degree, gens).expect("valid generators"), p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_class_counts() {
        let orders: Vec<usize> = corpus_catalog().iter().map(|e| e.group.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6, 6, 8, 8, 12, 12, 21, 24, 24, 48]);
        for e in corpus_catalog() {
            assert_eq!(e.group.class_count(), e.expected.class_count, "{}", e.name);
        }
    }

    #[test]
    fn primes_put_odd_first() {
        let gl = corpus_entry("GL23").unwrap();
        assert_eq!(gl.primes, vec![3, 2]);
        assert_eq!(corpus_entry("C1").unwrap().primes, Vec::<u64>::new());
    }

    #[test]
    fn a5_is_separate() {
        let r = rejection_catalog();
        assert_eq!(r[0].1.order(), 60);
        assert!(corpus_entry("A5").is_none());
    }
}

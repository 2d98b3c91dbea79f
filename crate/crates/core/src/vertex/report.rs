use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chartab::Character;
use crate::permgroup::Group;

/// One checked instance of a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub passed: bool,
    pub vacuous: bool,
    pub details: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(label: impl Into<String>, passed: bool, vacuous: bool) -> Self {
        Witness {
            label: label.into(),
            passed,
            vacuous,
            details: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }
}

/// Outcome of running one verifier over a set of instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub claim: String,
    pub instances: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub applicable: bool,
    pub note: Option<String>,
    pub witnesses: Vec<Witness>,
}

impl VerifierReport {
    pub fn new(claim: &str) -> Self {
        VerifierReport {
            claim: claim.to_string(),
            instances: 0,
            passed: 0,
            vacuous: 0,
            applicable: true,
            note: None,
            witnesses: Vec::new(),
        }
    }

    pub fn not_applicable(claim: &str, note: impl Into<String>) -> Self {
        VerifierReport {
            applicable: false,
            note: Some(note.into()),
            ..Self::new(claim)
        }
    }

    pub fn push(&mut self, w: Witness) {
        self.instances += 1;
        if w.passed {
            self.passed += 1;
        }
        if w.vacuous {
            self.vacuous += 1;
        }
        self.witnesses.push(w);
    }

    pub fn absorb(&mut self, other: VerifierReport) {
        for w in other.witnesses {
            self.push(w);
        }
    }

    pub fn failed(&self) -> usize {
        self.instances - self.passed
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.passed)
    }
}

/// `<gens> (order n)` in cycle notation.
pub fn describe_group(g: &Group) -> String {
    let gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
    format!("<{}> (order {})", gens.join(", "), g.order())
}

pub fn describe_character(chi: &Character) -> String {
    let vals: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
    format!("[{}]", vals.join(", "))
}

//! Suite runner and report rendering.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::{CorpusEntry, Expected};
use crate::brauer::ibr;
use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::permgroup::GroupRef;
use crate::vertex::{self, VerifierReport, Witness, CHECK_NAMES};

/// Pseudo-check comparing a corpus entry with its recorded golden values.
pub const GOLDEN: &str = "golden";

/// Which `(group, prime, check)` triples to run. Empty lists select everything.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    pub groups: Vec<String>,
    pub primes: Vec<u64>,
    pub checks: Vec<String>,
}

impl Selection {
    pub fn all() -> Self {
        Self::default()
    }

    fn wants_group(&self, name: &str) -> bool {
        self.groups.is_empty() || self.groups.iter().any(|g| g.eq_ignore_ascii_case(name))
    }

    fn wants_prime(&self, p: u64) -> bool {
        self.primes.is_empty() || self.primes.contains(&p)
    }

    fn check_names(&self, with_golden: bool) -> Result<Vec<String>> {
        let known = |c: &str| CHECK_NAMES.contains(&c) || c == GOLDEN;
        if let Some(bad) = self.checks.iter().find(|c| !known(c)) {
            return Err(Error::input(format!("unknown check `{bad}`")));
        }
        let mut names: Vec<String> = if self.checks.is_empty() || self.checks.iter().any(|c| c == "all") {
            CHECK_NAMES.iter().map(|c| c.to_string()).collect()
        } else {
            self.checks.clone()
        };
        if with_golden && (self.checks.is_empty() || self.checks.iter().any(|c| c == "all")) {
            names.push(GOLDEN.to_string());
        }
        if !with_golden {
            names.retain(|c| c != GOLDEN);
        }
        Ok(names)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ran,
    Unsupported,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub instances: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub note: Option<String>,
    pub witnesses: Vec<Witness>,
}

impl CheckOutcome {
    fn from_result(name: &str, res: Result<VerifierReport>) -> Self {
        match res {
            Ok(r) => CheckOutcome {
                name: name.to_string(),
                status: Status::Ran,
                instances: r.instances,
                passed: r.passed,
                vacuous: r.vacuous,
                note: r.note,
                witnesses: r.witnesses,
            },
            Err(e) => CheckOutcome {
                name: name.to_string(),
                status: if matches!(e, Error::UnsupportedPrime(_)) {
                    Status::Unsupported
                } else {
                    Status::Error
                },
                instances: 0,
                passed: 0,
                vacuous: 0,
                note: Some(e.to_string()),
                witnesses: Vec::new(),
            },
        }
    }

    pub fn failed(&self) -> usize {
        self.instances - self.passed
    }

    /// Failed instances plus one for a check that errored outright.
    pub fn failures(&self) -> usize {
        self.failed() + usize::from(self.status == Status::Error)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub group: String,
    pub order: usize,
    pub p: u64,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub entries: usize,
    pub checks_run: usize,
    pub unsupported: usize,
    pub errors: usize,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
}

impl Summary {
    fn of(entries: &[SuiteEntry]) -> Self {
        let mut s = Summary {
            entries: entries.len(),
            ..Summary::default()
        };
        for c in entries.iter().flat_map(|e| &e.checks) {
            match c.status {
                Status::Ran => s.checks_run += 1,
                Status::Unsupported => s.unsupported += 1,
                Status::Error => s.errors += 1,
            }
            s.instances += c.instances;
            s.passed += c.passed;
            s.failed += c.failed();
            s.vacuous += c.vacuous;
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub summary: Summary,
    pub metadata: Metadata,
}

impl SuiteReport {
    pub fn new(mut entries: Vec<SuiteEntry>, elapsed_ms: u64) -> Self {
        entries.sort_by(|a, b| (a.order, &a.group, a.p).cmp(&(b.order, &b.group, b.p)));
        let summary = Summary::of(&entries);
        SuiteReport {
            entries,
            summary,
            metadata: Metadata {
                version: env!("CARGO_PKG_VERSION").to_string(),
                elapsed_ms,
            },
        }
    }

    /// The exit-code contract: no failed instance and no errored check.
    pub fn success(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    pub fn check(&self, group: &str, p: u64, name: &str) -> Option<&CheckOutcome> {
        self.entries
            .iter()
            .find(|e| e.group.eq_ignore_ascii_case(group) && e.p == p)?
            .checks
            .iter()
            .find(|c| c.name == name)
    }
}

/// Runs one named check on `(g, p)`.
pub fn run_check(name: &str, g: &GroupRef, p: u64) -> Result<VerifierReport> {
    match name {
        "theoremA" => vertex::theorem_a_suite(g, p),
        "corollaryB" => vertex::corollary_b_verify(g, p),
        "cossey" => vertex::cossey_verify(g, p),
        "cl12" => vertex::cl12_suite(g, p),
        "lemmaA" => vertex::lemma_a_verify(g, p),
        "lemmaI52" => vertex::lemma_i52_verify(g, p),
        "lemma21" => vertex::lemma21_verify(g, p),
        "lemma22" => vertex::lemma22_verify(g, p),
        "lemma31" => vertex::lemma31_verify(g, p),
        "lemma32" => vertex::lemma32_verify(g, p),
        "fongSwan" => vertex::fong_swan_verify(g, p),
        other => Err(Error::input(format!("unknown check `{other}`"))),
    }
}

/// Compares recomputed order, class count and `|IBr_p|` with the recorded values.
pub fn golden_check(g: &GroupRef, expected: &Expected, p: u64) -> Result<VerifierReport> {
    let mut report = VerifierReport::new(GOLDEN);
    let order = g.order();
    report.push(
        Witness::new("order", order == expected.order, false)
            .with("expected", expected.order)
            .with("computed", order),
    );
    let classes = character_table(g).len();
    report.push(
        Witness::new("classes", classes == expected.class_count, false)
            .with("expected", expected.class_count)
            .with("computed", classes),
    );
    if let Some(&(_, want)) = expected.ibr_counts.iter().find(|(q, _)| *q == p) {
        let got = ibr(g, p)?.len();
        report.push(
            Witness::new(format!("ibr_{p}"), got == want, false)
                .with("expected", want)
                .with("computed", got),
        );
    }
    Ok(report)
}

struct Task<'a> {
    name: &'a str,
    group: &'a GroupRef,
    expected: Option<&'a Expected>,
    p: u64,
    check: String,
}

fn run_tasks(tasks: Vec<Task<'_>>, workers: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::internal(e.to_string()))?;
    let outcomes: Vec<(usize, CheckOutcome)> = pool.install(|| {
        tasks
            .par_iter()
            .enumerate()
            .map(|(i, t)| {
                let res = if t.check == GOLDEN {
                    golden_check(t.group, t.expected.expect("golden only on corpus entries"), t.p)
                } else {
                    run_check(&t.check, t.group, t.p)
                };
                (i, CheckOutcome::from_result(&t.check, res))
            })
            .collect()
    });
    let mut entries: Vec<SuiteEntry> = Vec::new();
    for (i, outcome) in outcomes {
        let t = &tasks[i];
        match entries.iter_mut().find(|e| e.group == t.name && e.p == t.p) {
            Some(e) => e.checks.push(outcome),
            None => entries.push(SuiteEntry {
                group: t.name.to_string(),
                order: t.group.order(),
                p: t.p,
                checks: vec![outcome],
            }),
        }
    }
    Ok(SuiteReport::new(entries, start.elapsed().as_millis() as u64))
}

/// Runs the selected checks over corpus entries on `workers` threads.
pub fn run_suite(corpus: &[CorpusEntry], selection: &Selection, workers: usize) -> Result<SuiteReport> {
    let checks = selection.check_names(true)?;
    let mut tasks = Vec::new();
    for e in corpus.iter().filter(|e| selection.wants_group(e.name)) {
        for &p in e.primes.iter().filter(|&&p| selection.wants_prime(p)) {
            for c in &checks {
                tasks.push(Task {
                    name: e.name,
                    group: &e.group,
                    expected: Some(&e.expected),
                    p,
                    check: c.clone(),
                });
            }
        }
    }
    if tasks.is_empty() {
        return Err(Error::input("selection matches no (group, prime) pair"));
    }
    run_tasks(tasks, workers)
}

/// Runs checks on a single user-supplied group.
pub fn run_group(name: &str, group: &GroupRef, p: u64, checks: &[String], workers: usize) -> Result<SuiteReport> {
    let selection = Selection {
        checks: checks.to_vec(),
        ..Selection::default()
    };
    let tasks = selection
        .check_names(false)?
        .into_iter()
        .map(|check| Task {
            name,
            group,
            expected: None,
            p,
            check,
        })
        .collect();
    run_tasks(tasks, workers)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub fn render_report(r: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes"),
        Format::Markdown => render_markdown(r),
    }
}

fn render_markdown(r: &SuiteReport) -> String {
    let mut out = String::new();
    let s = &r.summary;
    let _ = writeln!(out, "# liftlab suite report\n");
    let _ = writeln!(out, "version {}, {} ms\n", r.metadata.version, r.metadata.elapsed_ms);
    let _ = writeln!(
        out,
        "| entries | checks run | unsupported | errors | instances | passed | failed | vacuous |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|---|---|");
    let _ = writeln!(
        out,
        "| {} | {} | {} | {} | {} | {} | {} | {} |",
        s.entries, s.checks_run, s.unsupported, s.errors, s.instances, s.passed, s.failed, s.vacuous
    );
    for e in &r.entries {
        let _ = writeln!(out, "\n## {} (order {}), p = {}\n", e.group, e.order, e.p);
        let _ = writeln!(out, "| check | status | instances | passed | vacuous | note |");
        let _ = writeln!(out, "|---|---|---|---|---|---|");
        for c in &e.checks {
            let _ = writeln!(
                out,
                "| {} | {:?} | {} | {} | {} | {} |",
                c.name,
                c.status,
                c.instances,
                c.passed,
                c.vacuous,
                escape(c.note.as_deref().unwrap_or(""))
            );
        }
        if e.checks.iter().all(|c| c.witnesses.is_empty()) {
            continue;
        }
        let _ = writeln!(out, "\n| check | instance | result | details |");
        let _ = writeln!(out, "|---|---|---|---|");
        for c in &e.checks {
            for w in &c.witnesses {
                let result = match (w.passed, w.vacuous) {
                    (false, _) => "FAIL",
                    (true, true) => "pass (vacuous)",
                    (true, false) => "pass",
                };
                let details: Vec<String> = w.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    c.name,
                    escape(&w.label),
                    result,
                    escape(&details.join("; "))
                );
            }
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Optional overrides read from a TOML file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub order_bound: Option<usize>,
    pub workers: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::input(format!("bad config: {e}")))
    }
}

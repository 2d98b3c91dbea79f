//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liftlab::brauer::{ibr, lifts};
use liftlab::chartab::{character_table, Character};
use liftlab::harness::{corpus_catalog, corpus_entry, rejection_catalog, run_suite, Selection, Status, SuiteReport};
use liftlab::numtheory::is_power_of;
use liftlab::vertex::{brauer_vertex, lifts_with_vertex, stabilizer_of_character};
use liftlab::{Error, GroupRef};

use common::checks;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn suite(groups: &[&str], primes: &[u64], checks: &[&str]) -> Result<SuiteReport, String> {
    let sel = Selection {
        groups: groups.iter().map(|s| s.to_string()).collect(),
        primes: primes.to_vec(),
        checks: checks.iter().map(|s| s.to_string()).collect(),
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    run_suite(&corpus_catalog(), &sel, workers).map_err(err)
}

fn no_failures(r: &SuiteReport, allow_unsupported: bool) -> Result<(), String> {
    for e in &r.entries {
        for c in &e.checks {
            match c.status {
                Status::Error => {
                    return Err(format!(
                        "{} p={} {}: {}",
                        e.group,
                        e.p,
                        c.name,
                        c.note.clone().unwrap_or_default()
                    ))
                }
                Status::Unsupported if !allow_unsupported => {
                    return Err(format!("{} p={} {} unsupported", e.group, e.p, c.name))
                }
                _ => {}
            }
            if let Some(w) = c.witnesses.iter().find(|w| !w.passed) {
                return Err(format!(
                    "{} p={} {} failed at {}: {:?}",
                    e.group, e.p, c.name, w.label, w.details
                ));
            }
        }
    }
    Ok(())
}

fn o2(g: &GroupRef) -> Result<GroupRef, String> {
    let normals = g.normal_subgroups().map_err(err)?;
    normals
        .iter()
        .filter(|n| is_power_of(n.order() as u64, 2))
        .max_by_key(|n| n.order())
        .cloned()
        .ok_or_else(|| "no normal 2-subgroup".to_string())
}

fn gl23_example() -> Outcome {
    let start = Instant::now();
    let g = corpus_entry("GL23").ok_or("GL23 missing")?.group;
    let mut degrees = character_table(&g).degrees();
    degrees.sort_unstable();
    ensure(degrees == [1, 1, 2, 2, 2, 3, 3, 4], || format!("degrees {degrees:?}"))?;
    let n_ibr = ibr(&g, 3).map_err(err)?.len();
    ensure(n_ibr == 6, || format!("|IBr_3| = {n_ibr}"))?;

    let k = o2(&g)?;
    let involutions = k.elements().iter().filter(|x| x.order() == 2).count();
    ensure(k.order() == 8 && !k.is_abelian() && involutions == 1, || {
        "O_2(G) is not quaternion".into()
    })?;
    let q = g.sylow(3).map_err(err)?;
    ensure(!g.is_normal(&q), || "Sylow 3-subgroup is normal".into())?;
    let kq = g.join(&k, &q).map_err(err)?;
    ensure(
        kq.order() == 24 && g.is_normal(&kq) && kq.same_as(&g.derived_subgroup()) && kq.class_count() == 7,
        || "KQ is not SL(2,3)".into(),
    )?;

    let report = suite(&["GL23"], &[3], &["corollaryB"])?;
    no_failures(&report, false)?;
    let check = report.check("GL23", 3, "corollaryB").ok_or("missing corollaryB")?;
    let mut bounds = BTreeSet::new();
    let mut aggregate = 0;
    for w in &check.witnesses {
        if !w.details.get("Q").is_some_and(|s| s.ends_with("(order 3)")) {
            continue;
        }
        if let Some(b) = w.details.get("bound") {
            bounds.insert(b.parse::<usize>().map_err(|e| e.to_string())?);
        }
        if let Some(l) = w.details.get("L_phi_size") {
            let l: usize = l.parse().map_err(|e: std::num::ParseIntError| e.to_string())?;
            ensure(
                l <= 3 && w.details.get("Q_over_Q'").map(String::as_str) == Some("3"),
                || format!("|L_phi| = {l} at {}", w.label),
            )?;
            aggregate += 1;
        }
    }
    ensure(bounds == BTreeSet::from([1, 2]), || format!("bounds {bounds:?}"))?;
    ensure(aggregate == 4, || {
        format!("{aggregate} Brauer characters with vertex of order 3")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "degrees {degrees:?}, |IBr_3| = 6, O_2 = Q8, KQ = SL(2,3), bounds {bounds:?}, {} instances in {elapsed:.2?}",
        check.instances
    ))
}

fn linear_characters(q: &GroupRef) -> Vec<Character> {
    character_table(q)
        .irreducibles()
        .iter()
        .filter(|d| d.is_linear())
        .cloned()
        .collect()
}

fn equality_witnesses() -> Outcome {
    // C3: the lifts split into three singletons, one per linear character of Q.
    let c3 = corpus_entry("C3").ok_or("C3 missing")?.group;
    let phi = ibr(&c3, 3).map_err(err)?.remove(0);
    let all = lifts(&phi).map_err(err)?.members;
    ensure(all.len() == 3, || format!("C3: |L_phi| = {}", all.len()))?;
    let mut seen = Vec::new();
    for delta in linear_characters(&c3) {
        let part = lifts_with_vertex(&phi, &delta).map_err(err)?.members;
        ensure(part.len() == 1, || format!("C3: |L_phi(Q, delta)| = {}", part.len()))?;
        ensure(!seen.contains(&part[0]), || "C3: parts overlap".into())?;
        seen.push(part[0].clone());
    }
    ensure(seen.len() == all.len() && all.iter().all(|c| seen.contains(c)), || {
        "C3: parts do not cover".into()
    })?;

    let f21 = corpus_entry("F21").ok_or("F21 missing")?.group;
    let q = f21.sylow(3).map_err(err)?;
    let nq = f21.normalizer(&q).map_err(err)?;
    let abelianization = q.order() / q.derived_subgroup().order();
    let mut checked = 0;
    for phi in ibr(&f21, 3).map_err(err)? {
        let vertex = brauer_vertex(&phi).map_err(err)?;
        if vertex.order() != 3 {
            continue;
        }
        let v_linear = linear_characters(&vertex);
        for delta in &v_linear {
            let size = lifts_with_vertex(&phi, delta).map_err(err)?.len();
            let index = nq.order() / stabilizer_of_character(&f21, delta).map_err(err)?.order();
            let vertex_normalizer = f21.normalizer(&vertex).map_err(err)?.order();
            ensure(size == 1 && index == 1 && vertex_normalizer == nq.order(), || {
                format!("F21: |L_phi(Q, delta)| = {size}, index {index}")
            })?;
            checked += 1;
        }
        let total = lifts(&phi).map_err(err)?.len();
        ensure(total == 3 && abelianization == 3, || format!("F21: |L_phi| = {total}"))?;
    }
    ensure(checked == 3, || format!("F21: {checked} linear vertex characters"))?;
    Ok("C3: 3 singletons partition L_phi, |L_phi| = 3 = |Q:Q'|; F21: |L_phi(Q,delta)| = 1 = index for 3 deltas, |L_phi| = 3".into())
}

fn theorem_a_suite() -> Outcome {
    let start = Instant::now();
    let odd: Vec<u64> = corpus_catalog()
        .iter()
        .flat_map(|e| e.primes.clone())
        .filter(|&p| p > 2)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let report = suite(&[], &odd, &["theoremA"])?;
    no_failures(&report, false)?;
    let s = &report.summary;
    let elapsed = start.elapsed();
    ensure(s.instances > 0 && s.failed == 0, || format!("{} failures", s.failed))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} (group, p) entries, {} instances, {} vacuous, 0 failures in {elapsed:.2?}",
        s.entries, s.instances, s.vacuous
    ))
}

fn lemma_suite() -> Outcome {
    let names = ["lemma21", "lemma22", "lemmaI52", "cl12", "lemmaA", "lemma31", "lemma32"];
    let report = suite(&[], &[], &names)?;
    no_failures(&report, true)?;
    for name in names {
        let ran = report
            .entries
            .iter()
            .flat_map(|e| &e.checks)
            .filter(|c| c.name == name && c.status == Status::Ran)
            .map(|c| c.instances - c.vacuous)
            .sum::<usize>();
        ensure(ran > 0, || format!("{name} never exercised"))?;
    }
    let s = &report.summary;
    Ok(format!("{} instances ({} vacuous), 0 failures", s.instances, s.vacuous))
}

fn engine_exactness() -> Outcome {
    let mut oracle_groups = 0;
    for e in corpus_catalog() {
        let g = &e.group;
        let tag = |m: String| format!("{}: {m}", e.name);
        checks::degree_sum(g).map_err(tag)?;
        checks::row_orthogonality(g).map_err(tag)?;
        checks::column_orthogonality(g).map_err(tag)?;
        checks::frobenius_reciprocity(g).map_err(tag)?;
        for &p in &e.primes {
            checks::decomposition_reconstructs(g, p).map_err(tag)?;
        }
        if g.order() <= 24 {
            checks::matches_oracle(g).map_err(tag)?;
            oracle_groups += 1;
        }
    }
    Ok(format!(
        "all corpus groups exact; {oracle_groups} tables match the reference construction"
    ))
}

fn fong_swan() -> Outcome {
    let report = suite(&[], &[], &["fongSwan"])?;
    no_failures(&report, false)?;
    let (name, a5, p) = rejection_catalog().remove(0);
    match ibr(&a5, p) {
        Err(Error::Precondition(msg)) => Ok(format!(
            "{} Brauer characters all lifted; {name} at p = {p} rejected: {msg}",
            report.summary.instances
        )),
        other => Err(format!("{name} at p = {p} gave {other:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("GL(2,3) at p = 3", gl23_example),
        ("equality witnesses C3 and F21", equality_witnesses),
        ("theorem A suite", theorem_a_suite),
        ("lemma suite", lemma_suite),
        ("engine exactness", engine_exactness),
        ("Fong-Swan and A5 rejection", fong_swan),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Instance-by-instance verification of the lift-counting results.

use std::sync::Arc;

use crate::brauer::{brauer_table, ibr, inducing_brauer, lifts, restrict_to_p_regular, BrauerCharacter};
use crate::chartab::{character_table, constituents, induce, restrict, Character};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, p_part};
use crate::permgroup::{Group, GroupRef};
use crate::pspecial::{
    factorize, is_factorable, is_g_stable, is_p_prime_special, is_p_special, nh_stability, p_special_extension,
    special_product,
};

use super::report::{describe_character, describe_group, VerifierReport, Witness};
use super::{brauer_vertex, irr_with_vertex, lifts_with_vertex, stabilizer_of_character, vertex_pairs, wj_bijection};

/// Every check name accepted by the suite runner, in canonical order.
pub const CHECK_NAMES: &[&str] = &[
    "theoremA",
    "corollaryB",
    "cossey",
    "cl12",
    "lemmaA",
    "lemmaI52",
    "lemma21",
    "lemma22",
    "lemma31",
    "lemma32",
    "fongSwan",
];

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::UnsupportedPrime(2));
    }
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    Ok(())
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::input(format!("{p} is not prime")))
    }
}

fn require_p_solvable(g: &Group, p: u64) -> Result<()> {
    if g.is_p_solvable(p)? {
        Ok(())
    } else {
        Err(Error::precondition(format!("group is not {p}-solvable")))
    }
}

fn extends_to(delta: &Character, n: &GroupRef) -> Result<bool> {
    for chi in character_table(n).irreducibles() {
        if restrict(chi, delta.group())? == *delta {
            return Ok(true);
        }
    }
    Ok(false)
}

fn phi_label(phi: &BrauerCharacter) -> String {
    format!("{phi:?}")
}

fn chars_label(chars: &[Character]) -> String {
    let v: Vec<String> = chars.iter().map(describe_character).collect();
    format!("{{{}}}", v.join("; "))
}

fn derived_index(q: &Group) -> usize {
    q.order() / q.derived_subgroup().order()
}

/// Theorem A on one admissible tuple `(G, p, φ, Q, δ, N)`; `Q` is the group of `δ`.
pub fn theorem_a_verify(
    g: &GroupRef,
    p: u64,
    phi: &BrauerCharacter,
    delta: &Character,
    n: &GroupRef,
) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    require_p_solvable(g, p)?;
    let q = delta.group();
    if brauer_table(g, p)?.position(phi).is_none() {
        return Err(Error::precondition("phi is not in IBr(G)"));
    }
    let vertex = brauer_vertex(phi)?;
    if !q.is_subgroup_of(g) || !g.are_conjugate(q, &vertex) {
        return Err(Error::precondition("Q is not a vertex of phi"));
    }
    if character_table(q).position(delta).is_none() || !delta.is_linear() {
        return Err(Error::precondition("delta is not a linear character of Q"));
    }
    if !g.is_normal(n) {
        return Err(Error::precondition("N is not normal in G"));
    }
    if !q.is_subgroup_of(n) || q.order() as u64 != p_part(n.order() as u64, p) {
        return Err(Error::precondition("Q is not a Sylow p-subgroup of N"));
    }
    if !extends_to(delta, n)? {
        return Err(Error::precondition("delta does not extend to N"));
    }

    let ngq = g.normalizer(q)?;
    let ngqd = stabilizer_of_character(g, delta)?;
    let t = g.join(n, &ngqd)?;
    let bound = ngq.order() / ngqd.order();
    let l = lifts_with_vertex(phi, delta)?.members;

    let mut part1 = true;
    for chi in &l {
        for (theta, _) in constituents(chi, n)? {
            if !is_factorable(&theta, p)? {
                part1 = false;
            }
        }
    }

    let mut i_set = Vec::new();
    for eta in inducing_brauer(&t, phi)? {
        let v = brauer_vertex(&eta)?;
        if t.are_conjugate(&v, q) {
            i_set.push(eta);
        }
    }
    let t_with_delta = irr_with_vertex(&t, delta, p)?;
    let mut part2 = true;
    let mut images: Vec<Character> = Vec::new();
    for eta in &i_set {
        let tilde: Vec<Character> = lifts(eta)?
            .members
            .into_iter()
            .filter(|c| t_with_delta.contains(c))
            .collect();
        if tilde.len() != 1 {
            part2 = false;
            continue;
        }
        let induced = induce(&tilde[0], g)?;
        if !l.contains(&induced) || images.contains(&induced) {
            part2 = false;
        }
        images.push(induced);
    }
    if images.len() != l.len() || l.iter().any(|chi| !images.contains(chi)) {
        part2 = false;
    }
    let part3 = l.len() <= bound;
    let index_identity = g.order() / t.order() == bound;
    let frattini = g.join(n, &ngq)?.order() == g.order();

    let passed = part1 && part2 && part3 && index_identity && frattini;
    let vacuous = l.is_empty() && i_set.is_empty();
    let w = Witness::new(
        format!(
            "phi(1)={} |N|={} delta={}",
            phi.degree(),
            n.order(),
            describe_character(delta)
        ),
        passed,
        vacuous,
    )
    .with("phi", phi_label(phi))
    .with("Q", describe_group(q))
    .with("delta", describe_character(delta))
    .with("N", describe_group(n))
    .with("T_order", t.order())
    .with("L_size", l.len())
    .with("I_size", i_set.len())
    .with("bound", bound)
    .with("L", chars_label(&l))
    .with("part1", part1)
    .with("part2", part2)
    .with("part3", part3)
    .with("index_identity", index_identity)
    .with("frattini", frattini);
    let mut r = VerifierReport::new("theoremA");
    r.push(w);
    Ok(r)
}

/// Theorem A over every admissible `(φ, Q, δ, N)` of `G`.
pub fn theorem_a_suite(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    require_p_solvable(g, p)?;
    let mut report = VerifierReport::new("theoremA");
    let normals = g.normal_subgroups()?;
    for phi in ibr(g, p)? {
        let q = brauer_vertex(&phi)?;
        for delta in character_table(&q).irreducibles().iter().filter(|d| d.is_linear()) {
            for n in normals.iter() {
                if !q.is_subgroup_of(n) || q.order() as u64 != p_part(n.order() as u64, p) {
                    continue;
                }
                if !extends_to(delta, n)? {
                    continue;
                }
                report.absorb(theorem_a_verify(g, p, &phi, delta, n)?);
            }
        }
    }
    Ok(report)
}

/// Corollary B: for every `φ` with vertex `Q` and every normal p'-subgroup
/// `K` with `KQ ⊴ G`, the bound for each `δ ∈ Irr(Q)`, plus `|L_φ| ≤ |Q:Q'|`.
pub fn corollary_b_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    require_p_solvable(g, p)?;
    let mut report = VerifierReport::new("corollaryB");
    let normals = g.normal_subgroups()?;
    let mut any_applicable = false;
    for phi in ibr(g, p)? {
        let q = brauer_vertex(&phi)?;
        let mut ns: Vec<(GroupRef, GroupRef)> = Vec::new();
        for k in normals.iter().filter(|k| !(k.order() as u64).is_multiple_of(p)) {
            let n = g.join(k, &q)?;
            if g.is_normal(&n) && !ns.iter().any(|(_, m)| Arc::ptr_eq(m, &n)) {
                ns.push((Arc::clone(k), n));
            }
        }
        if ns.is_empty() {
            report.push(
                Witness::new(format!("phi(1)={} not applicable", phi.degree()), true, true)
                    .with("phi", phi_label(&phi))
                    .with("Q", describe_group(&q))
                    .with("applicable", false),
            );
            continue;
        }
        any_applicable = true;
        let ngq = g.normalizer(&q)?;
        for (k, n) in &ns {
            for delta in character_table(&q).irreducibles() {
                let mut w = if delta.is_linear() {
                    theorem_a_verify(g, p, &phi, delta, n)?.witnesses.remove(0)
                } else {
                    let l = lifts_with_vertex(&phi, delta)?.members;
                    let bound = ngq.order() / stabilizer_of_character(g, delta)?.order();
                    Witness::new(
                        format!(
                            "phi(1)={} |N|={} delta={}",
                            phi.degree(),
                            n.order(),
                            describe_character(delta)
                        ),
                        l.len() <= bound,
                        l.is_empty(),
                    )
                    .with("phi", phi_label(&phi))
                    .with("Q", describe_group(&q))
                    .with("delta", describe_character(delta))
                    .with("N", describe_group(n))
                    .with("L_size", l.len())
                    .with("bound", bound)
                };
                w = w.with("K", describe_group(k));
                report.push(w);
            }
        }
        let total = lifts(&phi)?.len();
        let qq = derived_index(&q);
        report.push(
            Witness::new(format!("phi(1)={} |L_phi| <= |Q:Q'|", phi.degree()), total <= qq, false)
                .with("phi", phi_label(&phi))
                .with("Q", describe_group(&q))
                .with("L_phi_size", total)
                .with("Q_over_Q'", qq),
        );
    }
    if !any_applicable {
        report.applicable = false;
        report.note = Some("no normal p'-subgroup K with KQ normal".into());
    }
    Ok(report)
}

/// `|L_φ| ≤ |Q:Q'|` for every `φ ∈ IBr(G)` with vertex `Q`.
pub fn cossey_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_prime(p)?;
    require_p_solvable(g, p)?;
    let mut report = VerifierReport::new("cossey");
    for phi in ibr(g, p)? {
        let q = brauer_vertex(&phi)?;
        let total = lifts(&phi)?.len();
        let qq = derived_index(&q);
        let normal = g.is_normal(&q);
        report.push(
            Witness::new(format!("phi(1)={}", phi.degree()), total <= qq, false)
                .with("phi", phi_label(&phi))
                .with("Q", describe_group(&q))
                .with("normal_vertex", normal)
                .with("L_phi_size", total)
                .with("Q_over_Q'", qq),
        );
    }
    Ok(report)
}

/// All vertex pairs of the lift `χ` are linear and mutually conjugate.
pub fn cl12_verify(chi: &Character, p: u64) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    let g = chi.group();
    require_p_solvable(g, p)?;
    let r = restrict_to_p_regular(chi, p);
    if brauer_table(g, p)?.position(&r).is_none() {
        return Err(Error::precondition("character is not a lift"));
    }
    let pairs = vertex_pairs(chi, p)?;
    let linear = pairs.iter().all(|vp| vp.is_linear());
    let conjugate = pairs.len() == 1;
    let mut report = VerifierReport::new("cl12");
    report.push(
        Witness::new(format!("chi={}", describe_character(chi)), linear && conjugate, false)
            .with("chi", describe_character(chi))
            .with("pair_classes", pairs.len())
            .with("linear", linear),
    );
    Ok(report)
}

/// `cl12_verify` for every lift in `Irr(G)`.
pub fn cl12_suite(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    require_p_solvable(g, p)?;
    let mut report = VerifierReport::new("cl12");
    for phi in ibr(g, p)? {
        for chi in lifts(&phi)?.members {
            report.absorb(cl12_verify(&chi, p)?);
        }
    }
    Ok(report)
}

/// For every subgroup class `T` and `φ ∈ IBr(G)`, at most `|G:T|` members
/// of `IBr(T)` induce `φ`.
pub fn lemma_a_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_prime(p)?;
    let phis = ibr(g, p)?;
    let mut report = VerifierReport::new("lemmaA");
    for t in g.subgroups_up_to_conjugacy()?.iter() {
        let index = g.order() / t.order();
        for phi in &phis {
            let count = inducing_brauer(t, phi)?.len();
            report.push(
                Witness::new(
                    format!("|T|={} phi(1)={}", t.order(), phi.degree()),
                    count <= index,
                    count == 0,
                )
                .with("T", describe_group(t))
                .with("phi", phi_label(phi))
                .with("count", count)
                .with("index", index),
            );
        }
    }
    Ok(report)
}

/// A lift induced from a p'-special character of a p'-index subgroup is p'-special.
pub fn lemma_i52_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    require_p_solvable(g, p)?;
    let table = character_table(g);
    let bt = brauer_table(g, p)?;
    let mut report = VerifierReport::new("lemmaI52");
    for w in g.subgroups_up_to_conjugacy()?.iter() {
        if ((g.order() / w.order()) as u64).is_multiple_of(p) {
            continue;
        }
        for beta in character_table(w).irreducibles() {
            if !is_p_prime_special(beta, p)? {
                continue;
            }
            let chi = induce(beta, g)?;
            if table.position(&chi).is_none() || bt.position(&restrict_to_p_regular(&chi, p)).is_none() {
                continue;
            }
            let ok = is_p_prime_special(&chi, p)?;
            report.push(
                Witness::new(format!("|W|={} beta(1)={}", w.order(), beta.degree()), ok, false)
                    .with("W", describe_group(w))
                    .with("beta", describe_character(beta))
                    .with("chi", describe_character(&chi)),
            );
        }
    }
    Ok(report)
}

/// Special products are irreducible and factorization round-trips.
pub fn lemma21_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_prime(p)?;
    require_p_solvable(g, p)?;
    let irr = character_table(g).irreducibles().to_vec();
    let mut report = VerifierReport::new("lemma21");
    for alpha in &irr {
        if !is_p_special(alpha, p)? {
            continue;
        }
        for beta in &irr {
            if !is_p_prime_special(beta, p)? {
                continue;
            }
            let prod = special_product(alpha, beta, p)?;
            let back = factorize(&prod, p)?;
            let ok = back
                .as_ref()
                .is_some_and(|f| f.p_part == *alpha && f.p_prime_part == *beta && f.whole == prod);
            report.push(
                Witness::new(
                    format!("alpha(1)={} beta(1)={}", alpha.degree(), beta.degree()),
                    ok,
                    false,
                )
                .with("alpha", describe_character(alpha))
                .with("beta", describe_character(beta)),
            );
        }
    }
    Ok(report)
}

/// `θ ∈ Irr(P)` extends to `G` iff it is `G`-stable, with a unique p-special extension.
pub fn lemma22_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_prime(p)?;
    require_p_solvable(g, p)?;
    let sylow = g.sylow(p)?;
    let mut report = VerifierReport::new("lemma22");
    for theta in character_table(&sylow).irreducibles() {
        let stable = is_g_stable(theta, g)?;
        let extends = extends_to(theta, g)?;
        let ext = p_special_extension(theta, g, p);
        let ok = stable == extends
            && match &ext {
                Ok(Some(chi)) => stable && restrict(chi, &sylow)? == *theta && chi.is_linear() == theta.is_linear(),
                Ok(None) => !stable,
                Err(_) => false,
            };
        report.push(
            Witness::new(format!("theta={}", describe_character(theta)), ok, false)
                .with("theta", describe_character(theta))
                .with("stable", stable)
                .with("extends", extends),
        );
    }
    Ok(report)
}

/// Restriction `Irr(G|Q,δ) → IBr(G|Q)` is bijective for linear `G`-stable `δ`,
/// over every p-subgroup class `Q`.
pub fn lemma31_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_odd_prime(p)?;
    require_p_solvable(g, p)?;
    let mut report = VerifierReport::new("lemma31");
    for q in g.subgroups_up_to_conjugacy()?.iter() {
        if q.order() as u64 != p_part(q.order() as u64, p) {
            continue;
        }
        for delta in character_table(q).irreducibles() {
            if !delta.is_linear() || !is_g_stable(delta, g)? {
                continue;
            }
            let label = format!("|Q|={} delta={}", q.order(), describe_character(delta));
            let w = match wj_bijection(g, delta, p) {
                Ok(map) => Witness::new(label, true, map.is_empty()).with("size", map.len()),
                Err(Error::Internal(m)) => Witness::new(label, false, false).with("error", m),
                Err(e) => return Err(e),
            };
            report.push(w.with("Q", describe_group(q)));
        }
    }
    Ok(report)
}

/// `NH`-stability of `δ` and `NH`-invariance of `δ̂` on every admissible
/// `(N, δ, H)` with `Q = Syl_p(N)`.
pub fn lemma32_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_prime(p)?;
    require_p_solvable(g, p)?;
    let mut report = VerifierReport::new("lemma32");
    let all = g.all_subgroups()?;
    for n in g.normal_subgroups()?.iter() {
        let q = n.sylow(p)?;
        let hs: Vec<&GroupRef> = all.iter().filter(|h| q.is_subgroup_of(h)).collect();
        for delta in character_table(&q).irreducibles() {
            if !extends_to(delta, n)? {
                continue;
            }
            for h in &hs {
                if !is_g_stable(delta, h)? {
                    continue;
                }
                let res = nh_stability(g, n, delta, h, p)?;
                report.push(
                    Witness::new(
                        format!(
                            "|N|={} |H|={} delta={}",
                            n.order(),
                            h.order(),
                            describe_character(delta)
                        ),
                        res.holds,
                        false,
                    )
                    .with("N", describe_group(n))
                    .with("H", describe_group(h))
                    .with("NH_order", res.nh_order),
                );
            }
        }
    }
    Ok(report)
}

/// Every `φ ∈ IBr(G)` has a lift.
pub fn fong_swan_verify(g: &GroupRef, p: u64) -> Result<VerifierReport> {
    require_prime(p)?;
    let mut report = VerifierReport::new("fongSwan");
    for phi in ibr(g, p)? {
        let n = lifts(&phi)?.len();
        report.push(
            Witness::new(format!("phi(1)={}", phi.degree()), n >= 1, false)
                .with("phi", phi_label(&phi))
                .with("lifts", n),
        );
    }
    Ok(report)
}

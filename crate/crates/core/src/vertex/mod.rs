//! Nuclei, vertex pairs, Brauer vertices and vertex-filtered lift sets.

mod report;
mod verify;

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::brauer::{brauer_induce, brauer_table, lifts, restrict_to_p_regular, BrauerCharacter, LiftSet};
use crate::chartab::{character_table, constituents, induce, restrict, Character};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::memo::MemoKey;
use crate::numtheory::{is_prime, p_part};
use crate::permgroup::{Group, GroupRef};
use crate::pspecial::{factorizations, is_g_stable, Factorization};

pub use report::{describe_character, describe_group, VerifierReport, Witness};
pub use verify::{
    cl12_suite, cl12_verify, corollary_b_verify, cossey_verify, fong_swan_verify, lemma21_verify, lemma22_verify,
    lemma31_verify, lemma32_verify, lemma_a_verify, lemma_i52_verify, theorem_a_suite, theorem_a_verify, CHECK_NAMES,
};

/// `(W, γ)` with `γ` factorable and `γ^G = χ`.
#[derive(Debug, Clone)]
pub struct Nucleus {
    pub subgroup: GroupRef,
    pub character: Character,
    pub factorization: Factorization,
}

/// Canonical key of a pair `(Q, δ)` up to `G`-conjugacy: the least
/// conjugate's element indices with the matching values of `δ`.
pub type PairKey = (Vec<usize>, Vec<Cyclotomic>);

/// `(Q, δ)`, stored as the least representative of its `G`-conjugacy class.
#[derive(Debug, Clone)]
pub struct VertexPair {
    pub q: GroupRef,
    pub delta: Character,
    key: PairKey,
}

impl VertexPair {
    pub fn key(&self) -> &PairKey {
        &self.key
    }

    pub fn is_linear(&self) -> bool {
        self.delta.is_linear()
    }
}

impl PartialEq for VertexPair {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for VertexPair {}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::input(format!("{p} is not prime")))
    }
}

fn check_p_solvable(g: &Group, p: u64) -> Result<()> {
    if g.is_p_solvable(p)? {
        Ok(())
    } else {
        Err(Error::precondition(format!("group is not {p}-solvable")))
    }
}

fn irr_index(chi: &Character) -> Result<usize> {
    character_table(chi.group())
        .position(chi)
        .ok_or_else(|| Error::precondition("character is not irreducible"))
}

/// Canonical form of `(Q, δ)` under conjugation by `G`, and the canonical pair.
pub fn canonical_pair(g: &GroupRef, delta: &Character) -> Result<VertexPair> {
    let q = delta.group();
    if !q.is_subgroup_of(g) {
        return Err(Error::input("vertex subgroup is not contained in the group"));
    }
    let q_idx: Vec<usize> = q.elements().iter().map(|x| g.index_of(x).expect("contained")).collect();
    let values: Vec<&Cyclotomic> = q.elements().iter().map(|x| delta.at(x).expect("in Q")).collect();
    let mut best: Option<(PairKey, usize)> = None;
    for x in 0..g.order() {
        let mut pairs: Vec<(usize, &Cyclotomic)> = q_idx
            .iter()
            .zip(&values)
            .map(|(&y, &v)| (g.conj_idx(y, x), v))
            .collect();
        pairs.sort_by_key(|(y, _)| *y);
        let key: PairKey = (
            pairs.iter().map(|(y, _)| *y).collect(),
            pairs.iter().map(|(_, v)| (*v).clone()).collect(),
        );
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, x));
        }
    }
    let (key, x) = best.expect("nonempty group");
    let delta = delta.conjugate_by(g.element(x));
    Ok(VertexPair {
        q: Arc::clone(delta.group()),
        delta,
        key,
    })
}

/// All nuclei of every irreducible, indexed like `Irr(G)`; one pair per
/// conjugacy class of `(W, γ)`.
fn all_nuclei(g: &GroupRef, p: u64) -> Result<Arc<Vec<Vec<Nucleus>>>> {
    g.memo.get_or_try(MemoKey::new("nuclei", &[p]), || {
        check_p_solvable(g, p)?;
        let table = character_table(g);
        let mut out: Vec<Vec<Nucleus>> = vec![Vec::new(); table.len()];
        for w in g.subgroups_up_to_conjugacy()?.iter() {
            let w_table = character_table(w);
            let facts = factorizations(w, p)?;
            let normalizer = g.normalizer(w)?;
            for (a, gamma) in w_table.irreducibles().iter().enumerate() {
                let Some((ap, _)) = facts[a] else { continue };
                let orbit_min = normalizer
                    .elements()
                    .iter()
                    .filter_map(|n| w_table.position(&gamma.conjugate_by(n)))
                    .min()
                    .expect("identity fixes gamma");
                if orbit_min != a {
                    continue;
                }
                let induced = induce(gamma, g)?;
                if let Some(k) = table.position(&induced) {
                    let (_, bp) = facts[a].expect("checked");
                    out[k].push(Nucleus {
                        subgroup: Arc::clone(w),
                        character: gamma.clone(),
                        factorization: Factorization {
                            whole: gamma.clone(),
                            p_part: w_table.irreducibles()[ap].clone(),
                            p_prime_part: w_table.irreducibles()[bp].clone(),
                        },
                    });
                }
            }
        }
        Ok(out)
    })
}

/// The nucleus reached by Clifford descent: stop once `χ` factors, otherwise
/// pass to the stabilizer of a constituent over the largest normal subgroup
/// whose constituents factor. Unique up to conjugacy.
pub fn canonical_nucleus(chi: &Character, p: u64) -> Result<Nucleus> {
    check_prime(p)?;
    check_p_solvable(chi.group(), p)?;
    irr_index(chi)?;
    let mut psi = chi.clone();
    loop {
        let h = Arc::clone(psi.group());
        let table = character_table(&h);
        let facts = factorizations(&h, p)?;
        let a = table.position(&psi).expect("irreducible");
        if let Some((ap, bp)) = facts[a] {
            return Ok(Nucleus {
                subgroup: h,
                character: psi.clone(),
                factorization: Factorization {
                    whole: psi,
                    p_part: table.irreducibles()[ap].clone(),
                    p_prime_part: table.irreducibles()[bp].clone(),
                },
            });
        }
        let mut good: Vec<(GroupRef, Character)> = Vec::new();
        for n in h.normal_subgroups()?.iter() {
            let (theta, _) = constituents(&psi, n)?.swap_remove(0);
            let n_facts = factorizations(n, p)?;
            let i = character_table(n).position(&theta).expect("irreducible");
            if n_facts[i].is_some() {
                good.push((Arc::clone(n), theta));
            }
        }
        let (n, theta) = good
            .iter()
            .find(|(n, _)| good.iter().all(|(m, _)| m.is_subgroup_of(n)))
            .cloned()
            .ok_or_else(|| Error::internal("no largest normal subgroup with factorable constituents"))?;
        let fixing: Vec<_> = h
            .elements()
            .iter()
            .filter(|x| theta.conjugate_by(x) == theta)
            .cloned()
            .collect();
        let stab = h.subgroup_generated(&fixing)?;
        if stab.order() == h.order() {
            return Err(Error::internal(format!(
                "invariant factorable constituent over a normal subgroup of order {}",
                n.order()
            )));
        }
        let over = constituents(&psi, &stab)?
            .into_iter()
            .map(|(c, _)| c)
            .filter(|c| constituents(c, &n).is_ok_and(|cs| cs.iter().any(|(t, _)| *t == theta)))
            .find(|c| induce(c, &h).is_ok_and(|x| x == psi))
            .ok_or_else(|| Error::internal("missing Clifford correspondent"))?;
        psi = over;
    }
}

fn canonical_vertices(g: &GroupRef, p: u64) -> Result<Arc<Vec<VertexPair>>> {
    g.memo.get_or_try(MemoKey::new("canonical_vertices", &[p]), || {
        let search = all_vertex_pairs(g, p)?;
        character_table(g)
            .irreducibles()
            .iter()
            .zip(search.iter())
            .map(|(chi, found)| {
                let nu = canonical_nucleus(chi, p)?;
                let q = nu.subgroup.sylow(p)?;
                let pair = canonical_pair(g, &restrict(&nu.factorization.p_part, &q)?)?;
                if !found.contains(&pair) {
                    return Err(Error::internal("canonical vertex missed by the nucleus search"));
                }
                Ok(pair)
            })
            .collect()
    })
}

/// The vertex of `χ` given by [`canonical_nucleus`]. For lifts with `p`
/// odd this is the only vertex pair up to conjugacy.
pub fn vertex(chi: &Character, p: u64) -> Result<VertexPair> {
    check_prime(p)?;
    let k = irr_index(chi)?;
    Ok(canonical_vertices(chi.group(), p)?[k].clone())
}

/// Nuclei `(W, γ)` of `χ`, up to conjugacy, optionally with `N ≤ W`.
pub fn nuclei(chi: &Character, p: u64, containing: Option<&GroupRef>) -> Result<Vec<Nucleus>> {
    check_prime(p)?;
    let g = chi.group();
    let k = irr_index(chi)?;
    if let Some(n) = containing {
        if !g.is_normal(n) {
            return Err(Error::precondition("N is not normal in G"));
        }
    }
    let all = all_nuclei(g, p)?;
    Ok(all[k]
        .iter()
        .filter(|nu| containing.is_none_or(|n| n.is_subgroup_of(&nu.subgroup)))
        .cloned()
        .collect())
}

fn all_vertex_pairs(g: &GroupRef, p: u64) -> Result<Arc<Vec<Vec<VertexPair>>>> {
    g.memo.get_or_try(MemoKey::new("vertex_pairs", &[p]), || {
        let nuclei = all_nuclei(g, p)?;
        nuclei
            .iter()
            .map(|list| {
                let mut pairs: Vec<VertexPair> = Vec::new();
                for nu in list {
                    let q = nu.subgroup.sylow(p)?;
                    let delta = restrict(&nu.factorization.p_part, &q)?;
                    let pair = canonical_pair(g, &delta)?;
                    if !pairs.contains(&pair) {
                        pairs.push(pair);
                    }
                }
                pairs.sort_by(|a, b| a.key.cmp(&b.key));
                Ok(pairs)
            })
            .collect()
    })
}

/// Vertex pairs of `χ` up to `G`-conjugacy, in canonical order.
pub fn vertex_pairs(chi: &Character, p: u64) -> Result<Vec<VertexPair>> {
    check_prime(p)?;
    let k = irr_index(chi)?;
    Ok(all_vertex_pairs(chi.group(), p)?[k].clone())
}

/// `Irr(G|Q, δ)`: irreducibles whose canonical vertex is `(Q, δ)` up to conjugacy.
pub fn irr_with_vertex(g: &GroupRef, delta: &Character, p: u64) -> Result<Vec<Character>> {
    check_prime(p)?;
    let key = canonical_pair(g, delta)?.key;
    let pairs = canonical_vertices(g, p)?;
    let table = character_table(g);
    Ok(table
        .irreducibles()
        .iter()
        .zip(pairs.iter())
        .filter(|(_, vp)| vp.key == key)
        .map(|(chi, _)| chi.clone())
        .collect())
}

/// `L_φ(Q, δ)`.
pub fn lifts_with_vertex(phi: &BrauerCharacter, delta: &Character) -> Result<LiftSet> {
    let all = lifts(phi)?;
    let with = irr_with_vertex(phi.group(), delta, phi.prime())?;
    Ok(LiftSet {
        brauer: phi.clone(),
        members: all.members.into_iter().filter(|chi| with.contains(chi)).collect(),
        vertex_filter: Some(delta.clone()),
    })
}

/// `N_H(Q, δ) = {h ∈ N_H(Q) : δ^h = δ}`.
pub fn stabilizer_of_character(h: &GroupRef, delta: &Character) -> Result<GroupRef> {
    let q = delta.group();
    let n = h.normalizer(q)?;
    let fixing: Vec<_> = n
        .elements()
        .iter()
        .filter(|x| delta.conjugate_by(x) == *delta)
        .cloned()
        .collect();
    h.subgroup_generated(&fixing)
}

/// Vertices of every member of `IBr_p(G)`, one canonical representative each.
fn all_brauer_vertices(g: &GroupRef, p: u64) -> Result<Arc<Vec<GroupRef>>> {
    g.memo.get_or_try(MemoKey::new("brauer_vertices", &[p]), || {
        check_p_solvable(g, p)?;
        let bt = brauer_table(g, p)?;
        let mut candidates: Vec<Vec<GroupRef>> = vec![Vec::new(); bt.irreducibles.len()];
        for w in g.subgroups_up_to_conjugacy()?.iter() {
            let sylow = w.sylow(p)?;
            for eta in brauer_table(w, p)?.irreducibles.iter() {
                if eta.degree() % p == 0 {
                    continue;
                }
                if let Some(j) = bt.position(&brauer_induce(eta, g)?) {
                    candidates[j].push(Arc::clone(&sylow));
                }
            }
        }
        let gp = p_part(g.order() as u64, p);
        let mut out = Vec::with_capacity(candidates.len());
        for (j, cands) in candidates.iter().enumerate() {
            let phi = &bt.irreducibles[j];
            let witness = || format!("phi = {phi:?} in a group of order {}", g.order());
            let smallest = cands
                .iter()
                .min_by_key(|q| q.order())
                .ok_or_else(|| Error::internal(format!("no p'-degree inducing pair for {}", witness())))?;
            let q = g.canonical_subgroup(smallest)?;
            for c in cands {
                if g.conjugate_into(&q, c).is_none() {
                    return Err(Error::internal(format!(
                        "minimal vertices are not unique up to conjugacy for {}",
                        witness()
                    )));
                }
            }
            if q.order() as u64 * p_part(phi.degree(), p) != gp {
                return Err(Error::internal(format!("|Q| * phi(1)_p != |G|_p for {}", witness())));
            }
            out.push(q);
        }
        Ok(out)
    })
}

/// Vertex of `φ ∈ IBr(G)` by p'-degree induction minimality, with
/// consistency checks; the result has one element.
pub fn brauer_vertices(phi: &BrauerCharacter) -> Result<Vec<GroupRef>> {
    let g = phi.group();
    let p = phi.prime();
    let bt = brauer_table(g, p)?;
    let j = bt
        .position(phi)
        .ok_or_else(|| Error::input("not an irreducible Brauer character"))?;
    let q = Arc::clone(&all_brauer_vertices(g, p)?[j]);
    if p > 2 {
        for chi in lifts(phi)?.members {
            for vp in vertex_pairs(&chi, p)? {
                if !g.are_conjugate(&vp.q, &q) {
                    return Err(Error::internal(format!(
                        "lift {chi:?} has a vertex pair not over the Brauer vertex of {phi:?}"
                    )));
                }
            }
        }
    }
    Ok(vec![q])
}

/// The Brauer vertex of `φ` (a canonical representative).
pub fn brauer_vertex(phi: &BrauerCharacter) -> Result<GroupRef> {
    Ok(brauer_vertices(phi)?.remove(0))
}

/// `IBr(G|Q)`: Brauer irreducibles whose vertex is conjugate to `Q`.
pub fn ibr_with_vertex(g: &GroupRef, q: &Group, p: u64) -> Result<Vec<BrauerCharacter>> {
    let vertices = all_brauer_vertices(g, p)?;
    let bt = brauer_table(g, p)?;
    Ok(bt
        .irreducibles
        .iter()
        .zip(vertices.iter())
        .filter(|(_, v)| g.are_conjugate(v, q))
        .map(|(phi, _)| phi.clone())
        .collect())
}

/// The map `χ ↦ χ^0` from `Irr(G|Q, δ)` to `IBr(G|Q)`, required to be a
/// bijection when `δ` is linear and `G`-stable.
pub fn wj_bijection(g: &GroupRef, delta: &Character, p: u64) -> Result<Vec<(Character, BrauerCharacter)>> {
    check_prime(p)?;
    check_p_solvable(g, p)?;
    let q = delta.group();
    if q.order() as u64 != p_part(q.order() as u64, p) {
        return Err(Error::precondition("Q is not a p-subgroup"));
    }
    if !delta.is_linear() || irr_index(delta).is_err() {
        return Err(Error::precondition("delta is not a linear character of Q"));
    }
    if !is_g_stable(delta, g)? {
        return Err(Error::precondition("delta is not G-stable"));
    }
    let domain = irr_with_vertex(g, delta, p)?;
    let codomain = ibr_with_vertex(g, q, p)?;
    let map: Vec<(Character, BrauerCharacter)> = domain
        .into_iter()
        .map(|chi| {
            let r = restrict_to_p_regular(&chi, p);
            (chi, r)
        })
        .collect();
    let images: BTreeSet<usize> = map
        .iter()
        .filter_map(|(_, r)| codomain.iter().position(|phi| phi == r))
        .collect();
    if images.len() != map.len() || images.len() != codomain.len() {
        return Err(Error::internal(format!(
            "restriction is not a bijection: {} characters, {} distinct images in IBr(G|Q), {} targets",
            map.len(),
            images.len(),
            codomain.len()
        )));
    }
    Ok(map)
}

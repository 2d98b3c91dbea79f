//! π-special characters, p-special × p'-special factorization, stability
//! and p-special extensions.

use std::sync::Arc;

use num_traits::Zero;

use crate::chartab::{character_table, restrict, tensor, Character};
use crate::error::{Error, Result};
use crate::memo::MemoKey;
use crate::numtheory::{is_prime, p_part, PrimeSet};
use crate::permgroup::{Group, GroupRef};

fn prime_set_key(pi: &PrimeSet) -> Vec<u64> {
    match pi {
        PrimeSet::Only(s) => std::iter::once(0).chain(s.iter().copied()).collect(),
        PrimeSet::AllExcept(s) => std::iter::once(1).chain(s.iter().copied()).collect(),
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::input(format!("{p} is not prime")))
    }
}

fn irr_index(chi: &Character) -> Result<usize> {
    character_table(chi.group())
        .position(chi)
        .ok_or_else(|| Error::precondition("character is not irreducible"))
}

/// π-speciality of every row of `Irr(G)`, checked against the definition on
/// every subnormal subgroup.
pub fn special_flags(group: &GroupRef, pi: &PrimeSet) -> Result<Arc<Vec<bool>>> {
    let key = prime_set_key(pi);
    group.memo.get_or_try(MemoKey::new("special", &key), || {
        if !group.is_pi_separable(pi)? {
            return Err(Error::precondition(format!("group is not {pi}-separable")));
        }
        let table = character_table(group);
        let mut flags: Vec<bool> = table
            .irreducibles()
            .iter()
            .map(|chi| pi.is_pi_number(chi.degree() as u64))
            .collect();
        for s in group.subnormal_subgroups()?.iter() {
            let sub_table = character_table(s);
            let orders = sub_table.determinant_orders();
            for (i, chi) in table.irreducibles().iter().enumerate() {
                if !flags[i] {
                    continue;
                }
                let res = restrict(chi, s)?;
                let coeffs = sub_table.decompose(&res)?;
                flags[i] = coeffs
                    .iter()
                    .zip(orders)
                    .all(|(m, &o)| m.is_zero() || pi.is_pi_number(o));
            }
        }
        Ok(flags)
    })
}

/// `χ` is π-special: π-degree, and every constituent on every subnormal
/// subgroup has π-number determinantal order.
pub fn is_pi_special(chi: &Character, pi: &PrimeSet) -> Result<bool> {
    let i = irr_index(chi)?;
    Ok(special_flags(chi.group(), pi)?[i])
}

pub fn is_p_special(chi: &Character, p: u64) -> Result<bool> {
    check_prime(p)?;
    is_pi_special(chi, &PrimeSet::only(p))
}

pub fn is_p_prime_special(chi: &Character, p: u64) -> Result<bool> {
    check_prime(p)?;
    is_pi_special(chi, &PrimeSet::excluding(p))
}

/// `χ = χ_p · χ_{p'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub whole: Character,
    pub p_part: Character,
    pub p_prime_part: Character,
}

/// For each row of `Irr(G)`, the row indices of its p-special and
/// p'-special factors when it is factorable.
pub fn factorizations(group: &GroupRef, p: u64) -> Result<Arc<Vec<Option<(usize, usize)>>>> {
    check_prime(p)?;
    group.memo.get_or_try(MemoKey::new("factorizations", &[p]), || {
        if !group.is_p_solvable(p)? {
            return Err(Error::precondition(format!("group is not {p}-solvable")));
        }
        let table = character_table(group);
        let irr = table.irreducibles();
        let ps = special_flags(group, &PrimeSet::only(p))?;
        let pps = special_flags(group, &PrimeSet::excluding(p))?;
        let mut out = vec![None; irr.len()];
        for a in (0..irr.len()).filter(|&i| ps[i]) {
            for b in (0..irr.len()).filter(|&i| pps[i]) {
                let prod = tensor(&irr[a], &irr[b])?;
                if let Some(k) = table.position(&prod) {
                    if out[k].is_some() {
                        return Err(Error::internal(format!(
                            "character {k} has two distinct factorizations"
                        )));
                    }
                    out[k] = Some((a, b));
                }
            }
        }
        Ok(out)
    })
}

pub fn factorize(chi: &Character, p: u64) -> Result<Option<Factorization>> {
    let i = irr_index(chi)?;
    let facts = factorizations(chi.group(), p)?;
    let irr = character_table(chi.group());
    Ok(facts[i].map(|(a, b)| Factorization {
        whole: chi.clone(),
        p_part: irr.irreducibles()[a].clone(),
        p_prime_part: irr.irreducibles()[b].clone(),
    }))
}

pub fn is_factorable(chi: &Character, p: u64) -> Result<bool> {
    Ok(factorize(chi, p)?.is_some())
}

/// `αβ` for a p-special `α` and p'-special `β`; always irreducible.
pub fn special_product(alpha: &Character, beta: &Character, p: u64) -> Result<Character> {
    if !is_p_special(alpha, p)? {
        return Err(Error::precondition(format!("first factor is not {p}-special")));
    }
    if !is_p_prime_special(beta, p)? {
        return Err(Error::precondition(format!("second factor is not {p}'-special")));
    }
    let prod = tensor(alpha, beta)?;
    if !prod.is_irreducible() {
        return Err(Error::internal("product of special characters is reducible"));
    }
    Ok(prod)
}

/// `δ(x) = δ(y)` whenever `x, y ∈ Q` are conjugate in `H`.
pub fn is_g_stable(delta: &Character, h: &Group) -> Result<bool> {
    let fusion = delta.group().fusion_into(h)?;
    let mut seen: Vec<Option<usize>> = vec![None; h.class_count()];
    for (i, &c) in fusion.iter().enumerate() {
        match seen[c] {
            Some(j) if delta.value(j) != delta.value(i) => return Ok(false),
            Some(_) => {}
            None => seen[c] = Some(i),
        }
    }
    Ok(true)
}

fn check_sylow(q: &Group, g: &Group, p: u64) -> Result<()> {
    if !q.is_subgroup_of(g) {
        return Err(Error::precondition("Q is not a subgroup"));
    }
    if q.order() as u64 != p_part(g.order() as u64, p) {
        return Err(Error::precondition(format!("Q is not a Sylow {p}-subgroup")));
    }
    Ok(())
}

/// The unique p-special `χ ∈ Irr(G)` with `χ_P = θ`, or `None` when `θ` is
/// not `G`-stable.
pub fn p_special_extension(theta: &Character, g: &GroupRef, p: u64) -> Result<Option<Character>> {
    check_prime(p)?;
    check_sylow(theta.group(), g, p)?;
    if !g.is_p_solvable(p)? {
        return Err(Error::precondition(format!("group is not {p}-solvable")));
    }
    irr_index(theta)?;
    let stable = is_g_stable(theta, g)?;
    let table = character_table(g);
    let flags = special_flags(g, &PrimeSet::only(p))?;
    let mut found = Vec::new();
    for (i, chi) in table.irreducibles().iter().enumerate() {
        if flags[i] && restrict(chi, theta.group())? == *theta {
            found.push(chi.clone());
        }
    }
    match (stable, found.len()) {
        (true, 1) => Ok(found.pop()),
        (false, 0) => Ok(None),
        (s, n) => Err(Error::internal(format!("stability {s} but {n} p-special extensions"))),
    }
}

/// Result of the `NH`-stability check.
#[derive(Debug, Clone)]
pub struct NhStability {
    /// `δ` is `NH`-stable and `δ̂` is `NH`-invariant.
    pub holds: bool,
    pub extension: Character,
    pub nh_order: usize,
}

/// For `N ⊴ G`, `Q ∈ Syl_p(N)`, `δ ∈ Irr(Q)` extending to `N` and `H`-stable
/// with `Q ≤ H ≤ G`: checks that `δ` is `NH`-stable and that its p-special
/// extension `δ̂` to `N` is `NH`-invariant.
pub fn nh_stability(g: &GroupRef, n: &GroupRef, delta: &Character, h: &GroupRef, p: u64) -> Result<NhStability> {
    check_prime(p)?;
    let q = delta.group();
    if !g.is_normal(n) {
        return Err(Error::precondition("N is not normal in G"));
    }
    check_sylow(q, n, p).map_err(|_| Error::precondition("Q is not a Sylow p-subgroup of N"))?;
    if !q.is_subgroup_of(h) || !h.is_subgroup_of(g) {
        return Err(Error::precondition("Q <= H <= G fails"));
    }
    irr_index(delta)?;
    let extends = character_table(n)
        .irreducibles()
        .iter()
        .any(|chi| restrict(chi, q).map(|r| r == *delta).unwrap_or(false));
    if !extends {
        return Err(Error::precondition("delta does not extend to N"));
    }
    if !is_g_stable(delta, h)? {
        return Err(Error::precondition("delta is not H-stable"));
    }
    let nh = g.join(n, h)?;
    let extension = p_special_extension(delta, n, p)?
        .ok_or_else(|| Error::internal("extendible delta has no p-special extension"))?;
    let stable = is_g_stable(delta, &nh)?;
    let invariant = nh.generators().iter().all(|x| extension.conjugate_by(x) == extension);
    Ok(NhStability {
        holds: stable && invariant,
        extension,
        nh_order: nh.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::corpus_entry;
    use crate::permgroup::Permutation;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s3() -> GroupRef {
        corpus_entry("S3").unwrap().group
    }

    #[test]
    fn speciality_in_s3() {
        let g = s3();
        let irr = character_table(&g).irreducibles().to_vec();
        let three = PrimeSet::only(3);
        let two = PrimeSet::only(2);
        assert!(is_pi_special(&irr[0], &three).unwrap());
        assert!(!is_pi_special(&irr[1], &three).unwrap());
        assert!(is_pi_special(&irr[1], &two).unwrap());
        assert!(!is_pi_special(&irr[2], &two).unwrap());
    }

    #[test]
    fn factorization_in_s3() {
        let g = s3();
        let irr = character_table(&g).irreducibles().to_vec();
        let f = factorize(&irr[1], 3).unwrap().unwrap();
        assert!(f.p_part.is_trivial());
        assert_eq!(f.p_prime_part, irr[1]);
        assert!(factorize(&irr[2], 3).unwrap().is_none());
        assert_eq!(special_product(&irr[0], &irr[1], 3).unwrap(), irr[1]);
    }

    #[test]
    fn stability_and_extension() {
        let g = s3();
        let c3 = g.subgroup_generated(&[perm(3, &[&[1, 2, 3]])]).unwrap();
        let delta = character_table(&c3).irreducibles()[1].clone();
        assert!(!is_g_stable(&delta, &g).unwrap());
        assert!(is_g_stable(&delta, &c3).unwrap());
        assert!(p_special_extension(&delta, &g, 3).unwrap().is_none());
        let triv = p_special_extension(&Character::trivial(&c3), &g, 3).unwrap().unwrap();
        assert!(triv.is_trivial());
        let err = nh_stability(&g, &c3, &delta, &g, 3).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let ok = nh_stability(&g, &c3, &delta, &c3, 3).unwrap();
        assert!(ok.holds);
        assert_eq!(ok.extension, delta);
    }
}

//! Brauer characters of p-solvable groups, read off from ordinary ones.

mod solver;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chartab::{character_table, Character};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::memo::MemoKey;
use crate::numtheory::{gcd, is_prime};
use crate::permgroup::{Group, GroupRef};

use solver::Item;

/// Indices of the classes whose elements have order prime to `p`.
pub fn p_regular_classes(group: &Group, p: u64) -> Vec<usize> {
    group
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| gcd(c.element_order, p) == 1)
        .map(|(i, _)| i)
        .collect()
}

/// A class function on the p-regular classes of a group.
#[derive(Clone)]
pub struct BrauerCharacter {
    group: GroupRef,
    p: u64,
    classes: Arc<[usize]>,
    values: Arc<[Cyclotomic]>,
}

impl BrauerCharacter {
    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Group class indices the values refer to.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn degree(&self) -> u64 {
        u64::try_from(self.values[0].as_integer().expect("integral degree")).expect("positive degree")
    }

    fn weight(&self) -> u64 {
        self.degree()
    }

    fn coordinates(&self) -> Vec<BigRational> {
        let m = ambient(self.group.exponent());
        self.values.iter().flat_map(|v| v.coordinates(m)).collect()
    }
}

fn ambient(e: u64) -> u64 {
    if e % 4 == 2 {
        e / 2
    } else {
        e
    }
}

impl PartialEq for BrauerCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.group.same_as(&other.group) && self.values == other.values
    }
}

impl Eq for BrauerCharacter {}

impl fmt::Debug for BrauerCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Brauer_{}[", self.p)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// `χ^0`: the restriction of `χ` to the p-regular classes.
pub fn restrict_to_p_regular(chi: &Character, p: u64) -> BrauerCharacter {
    let classes = p_regular_classes(chi.group(), p);
    let values = classes.iter().map(|&c| chi.value(c).clone()).collect();
    BrauerCharacter {
        group: Arc::clone(chi.group()),
        p,
        classes: classes.into(),
        values,
    }
}

/// `IBr_p(G)` with the decomposition matrix (rows follow `Irr(G)`).
#[derive(Debug)]
pub struct BrauerTable {
    pub irreducibles: Vec<BrauerCharacter>,
    pub decomposition: Vec<Vec<u64>>,
}

impl BrauerTable {
    pub fn position(&self, phi: &BrauerCharacter) -> Option<usize> {
        self.irreducibles.iter().position(|x| x == phi)
    }

    /// Row indices of `Irr(G)` whose restriction is exactly `IBr[j]`.
    pub fn lift_indices(&self, j: usize) -> Vec<usize> {
        self.decomposition
            .iter()
            .enumerate()
            .filter(|(_, row)| row.iter().enumerate().all(|(k, &d)| d == u64::from(k == j)))
            .map(|(i, _)| i)
            .collect()
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::input(format!("{p} is not prime")))
    }
}

/// Computes `IBr_p(G)`: the restrictions `χ^0` that are not nonnegative
/// integer combinations of smaller restrictions.
pub fn brauer_table(group: &GroupRef, p: u64) -> Result<Arc<BrauerTable>> {
    check_prime(p)?;
    group.memo.get_or_try(MemoKey::new("ibr", &[p]), || {
        if !group.is_p_solvable(p)? {
            return Err(Error::precondition(format!(
                "group of order {} is not {p}-solvable",
                group.order()
            )));
        }
        let table = character_table(group);
        let mut restrictions: Vec<BrauerCharacter> = Vec::new();
        for chi in table.irreducibles() {
            let r = restrict_to_p_regular(chi, p);
            if !restrictions.contains(&r) {
                restrictions.push(r);
            }
        }
        restrictions.sort_by(|a, b| (a.degree(), &a.values[..]).cmp(&(b.degree(), &b.values[..])));

        let mut ibr: Vec<BrauerCharacter> = Vec::new();
        let mut items: Vec<Item> = Vec::new();
        for r in restrictions {
            let coords = r.coordinates();
            let smaller: Vec<Item> = items
                .iter()
                .zip(&ibr)
                .filter(|(_, phi)| phi.degree() < r.degree())
                .map(|(it, _)| it.clone())
                .collect();
            if solver::solve(&smaller, &coords, r.weight()).is_none() {
                items.push(Item {
                    coords,
                    weight: r.weight(),
                });
                ibr.push(r);
            }
        }
        let regular = p_regular_classes(group, p).len();
        if ibr.len() != regular || solver::rank(&items.iter().map(|i| i.coords.clone()).collect::<Vec<_>>()) != regular
        {
            return Err(Error::internal(format!(
                "found {} Brauer irreducibles for {regular} p-regular classes",
                ibr.len()
            )));
        }
        let decomposition = table
            .irreducibles()
            .iter()
            .map(|chi| {
                let r = restrict_to_p_regular(chi, p);
                solver::solve(&items, &r.coordinates(), r.weight())
                    .ok_or_else(|| Error::internal("restriction does not decompose"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BrauerTable {
            irreducibles: ibr,
            decomposition,
        })
    })
}

pub fn ibr(group: &GroupRef, p: u64) -> Result<Vec<BrauerCharacter>> {
    Ok(brauer_table(group, p)?.irreducibles.clone())
}

pub fn decomposition_matrix(group: &GroupRef, p: u64) -> Result<Vec<Vec<u64>>> {
    Ok(brauer_table(group, p)?.decomposition.clone())
}

/// `L_φ`, optionally narrowed to lifts with a given vertex character `δ`
/// (whose group is the vertex `Q`).
#[derive(Debug, Clone)]
pub struct LiftSet {
    pub brauer: BrauerCharacter,
    pub members: Vec<Character>,
    pub vertex_filter: Option<Character>,
}

impl LiftSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All `χ ∈ Irr(G)` with `χ^0 = φ`.
pub fn lifts(phi: &BrauerCharacter) -> Result<LiftSet> {
    let bt = brauer_table(&phi.group, phi.p)?;
    let j = bt
        .position(phi)
        .ok_or_else(|| Error::input("not an irreducible Brauer character"))?;
    let table = character_table(&phi.group);
    let members = bt
        .lift_indices(j)
        .into_iter()
        .map(|i| table.irreducibles()[i].clone())
        .collect();
    Ok(LiftSet {
        brauer: phi.clone(),
        members,
        vertex_filter: None,
    })
}

/// `η^G` evaluated on the p-regular classes of `G`.
pub fn brauer_induce(eta: &BrauerCharacter, g: &GroupRef) -> Result<BrauerCharacter> {
    let t = &eta.group;
    let fusion = t.fusion_into(g)?;
    let mut sums = vec![Cyclotomic::zero(); g.class_count()];
    for (pos, &c) in eta.classes.iter().enumerate() {
        let w = BigRational::from_integer(BigInt::from(t.classes()[c].size));
        sums[fusion[c]] += &eta.values[pos].scale(&w);
    }
    let classes = p_regular_classes(g, eta.p);
    let values = classes
        .iter()
        .map(|&k| {
            let f = BigRational::new(BigInt::from(g.centralizer_order(k)), BigInt::from(t.order()));
            sums[k].scale(&f)
        })
        .collect();
    Ok(BrauerCharacter {
        group: Arc::clone(g),
        p: eta.p,
        classes: classes.into(),
        values,
    })
}

/// Every `η ∈ IBr(T)` with `η^G = φ`.
pub fn inducing_brauer(t: &GroupRef, phi: &BrauerCharacter) -> Result<Vec<BrauerCharacter>> {
    if !t.is_subgroup_of(&phi.group) {
        return Err(Error::input("T is not a subgroup of the Brauer character's group"));
    }
    let mut out = Vec::new();
    for eta in brauer_table(t, phi.p)?.irreducibles.iter() {
        if brauer_induce(eta, &phi.group)? == *phi {
            out.push(eta.clone());
        }
    }
    Ok(out)
}

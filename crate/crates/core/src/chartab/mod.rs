//! Ordinary characters and the class-function algebra.

mod dixon;
mod table;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::lcm;
use crate::permgroup::{GroupRef, Permutation};

pub use table::{character_table, CharacterTable};

/// A class function with integer degree, stored against one group.
///
/// Values are indexed by the group's canonical class order. Virtual
/// characters (integer combinations with negative coefficients) are allowed;
/// operations that need a genuine character check it.
#[derive(Clone)]
pub struct Character {
    group: GroupRef,
    values: Arc<[Cyclotomic]>,
}

impl Character {
    pub fn new(group: &GroupRef, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::input(format!(
                "{} values for a group with {} classes",
                values.len(),
                group.class_count()
            )));
        }
        if values[0].as_integer().is_none() {
            return Err(Error::input(format!("degree {} is not an integer", values[0])));
        }
        Ok(Character {
            group: Arc::clone(group),
            values: values.into(),
        })
    }

    pub fn trivial(group: &GroupRef) -> Self {
        Character {
            group: Arc::clone(group),
            values: vec![Cyclotomic::one(); group.class_count()].into(),
        }
    }

    /// The regular character: `|G|` at the identity, zero elsewhere.
    pub fn regular(group: &GroupRef) -> Self {
        let mut v = vec![Cyclotomic::zero(); group.class_count()];
        v[0] = Cyclotomic::from_integer(group.order() as i64);
        Character {
            group: Arc::clone(group),
            values: v.into(),
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at an element of the group.
    pub fn at(&self, x: &Permutation) -> Result<&Cyclotomic> {
        let c = self
            .group
            .class_of(x)
            .ok_or_else(|| Error::input(format!("{x} is not in the character's group")))?;
        Ok(&self.values[c])
    }

    pub fn degree(&self) -> i64 {
        self.values[0]
            .as_integer()
            .and_then(|d| d.to_i64())
            .expect("degree is a small integer by construction")
    }

    pub fn is_linear(&self) -> bool {
        self.degree() == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == Cyclotomic::one())
    }

    pub fn norm(&self) -> BigRational {
        inner_product(self, self).expect("same group")
    }

    pub fn is_irreducible(&self) -> bool {
        self.degree() > 0 && self.norm().is_one()
    }

    /// Nonnegative integer multiplicities against `Irr(G)`, and not zero.
    pub fn is_character(&self) -> bool {
        let table = character_table(&self.group);
        match table.decompose(self) {
            Ok(c) => c.iter().all(|m| m.is_integer() && !m.is_negative()) && c.iter().any(|m| !m.is_zero()),
            Err(_) => false,
        }
    }

    pub fn complex_conjugate(&self) -> Character {
        self.map(|v| v.complex_conjugate())
    }

    /// `χ^σ` for `σ: ζ ↦ ζ^k`, with `k` prime to the group exponent.
    pub fn galois_conjugate(&self, k: i64) -> Result<Character> {
        let e = self.group.exponent() as i64;
        if num_integer::gcd(k.rem_euclid(e.max(1)), e) != 1 && e > 1 {
            return Err(Error::input(format!("{k} is not prime to the exponent {e}")));
        }
        Ok(self.map(|v| v.galois_unchecked(k)))
    }

    /// `θ^g` on `H^g`, where `θ^g(g⁻¹ h g) = θ(h)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Character {
        let h = self.group.conjugated(g);
        let ginv = g.inverse();
        let values = h
            .classes()
            .iter()
            .map(|c| {
                let back = c.representative.conjugate_by(&ginv);
                self.at(&back).expect("conjugate lies in the original group").clone()
            })
            .collect();
        Character { group: h, values }
    }

    fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Character {
        Character {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Character {
        let q = BigRational::from_integer(BigInt::from(k));
        self.map(|v| v.scale(&q))
    }

    pub fn kernel_classes(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&i| self.values[i] == self.values[0])
            .collect()
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}

impl Eq for Character {}

impl std::hash::Hash for Character {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.order().hash(state);
        self.values.hash(state);
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

fn same_group(a: &Character, b: &Character) -> Result<()> {
    if a.group.same_as(&b.group) {
        Ok(())
    } else {
        Err(Error::input("characters belong to different groups"))
    }
}

/// `(1/|G|) Σ_g θ(g) conj(ψ(g))`.
pub fn inner_product(theta: &Character, psi: &Character) -> Result<BigRational> {
    same_group(theta, psi)?;
    let g = &theta.group;
    let mut acc = Cyclotomic::zero();
    for (i, c) in g.classes().iter().enumerate() {
        let term = &theta.values[i] * &psi.values[i].complex_conjugate();
        acc += &term.scale(&BigRational::from_integer(BigInt::from(c.size)));
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| Error::internal("inner product is not rational"))?;
    Ok(total / BigRational::from_integer(BigInt::from(g.order())))
}

pub fn tensor(a: &Character, b: &Character) -> Result<Character> {
    same_group(a, b)?;
    Ok(Character {
        group: Arc::clone(&a.group),
        values: a.values.iter().zip(b.values.iter()).map(|(x, y)| x * y).collect(),
    })
}

pub fn add(a: &Character, b: &Character) -> Result<Character> {
    same_group(a, b)?;
    Ok(Character {
        group: Arc::clone(&a.group),
        values: a.values.iter().zip(b.values.iter()).map(|(x, y)| x + y).collect(),
    })
}

pub fn sub(a: &Character, b: &Character) -> Result<Character> {
    same_group(a, b)?;
    Ok(Character {
        group: Arc::clone(&a.group),
        values: a.values.iter().zip(b.values.iter()).map(|(x, y)| x - y).collect(),
    })
}

/// `χ_H` for a subgroup `H` of the character's group.
pub fn restrict(chi: &Character, h: &GroupRef) -> Result<Character> {
    let fusion = h.fusion_into(&chi.group)?;
    Ok(Character {
        group: Arc::clone(h),
        values: fusion.iter().map(|&c| chi.values[c].clone()).collect(),
    })
}

/// `θ^G` for `θ` on a subgroup of `g`.
pub fn induce(theta: &Character, g: &GroupRef) -> Result<Character> {
    let h = &theta.group;
    let fusion = h.fusion_into(g)?;
    let mut sums = vec![Cyclotomic::zero(); g.class_count()];
    for (i, c) in h.classes().iter().enumerate() {
        let w = BigRational::from_integer(BigInt::from(c.size));
        sums[fusion[i]] += &theta.values[i].scale(&w);
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let f = BigRational::new(BigInt::from(g.centralizer_order(k)), BigInt::from(h.order()));
            s.scale(&f)
        })
        .collect();
    Ok(Character {
        group: Arc::clone(g),
        values,
    })
}

/// Irreducible constituents of `χ_H` with their multiplicities.
pub fn constituents(chi: &Character, h: &GroupRef) -> Result<Vec<(Character, u64)>> {
    let res = restrict(chi, h)?;
    let table = character_table(h);
    let coeffs = table.decompose(&res)?;
    let mut out = Vec::new();
    for (row, m) in table.irreducibles().iter().zip(coeffs) {
        if m.is_zero() {
            continue;
        }
        if !m.is_integer() || m.is_negative() {
            return Err(Error::input("restriction is not a character"));
        }
        out.push((row.clone(), m.to_integer().to_u64().expect("small multiplicity")));
    }
    Ok(out)
}

/// `θ` extends to `χ`, i.e. `χ_H = θ`.
pub fn extends(theta: &Character, chi: &Character) -> Result<bool> {
    Ok(restrict(chi, theta.group())? == *theta)
}

/// Order of the linear character `det ∘ ρ` for a representation `ρ` affording `χ`.
///
/// On a class of element order `m` the eigenvalue multiplicities are
/// recovered by Fourier inversion over the powers of a representative.
pub fn determinant_order(chi: &Character) -> Result<u64> {
    let g = &chi.group;
    let mut order = 1u64;
    let mut power_maps: Vec<Option<Vec<usize>>> = vec![None; g.exponent() as usize + 1];
    for (k, class) in g.classes().iter().enumerate() {
        let m = class.element_order;
        if m == 1 {
            continue;
        }
        let powers: Vec<usize> = (0..m)
            .map(|t| {
                let pm = power_maps[t as usize].get_or_insert_with(|| g.power_map(t as i64));
                pm[k]
            })
            .collect();
        let mut exponent_sum = BigInt::zero();
        for j in 0..m {
            let mut acc = Cyclotomic::zero();
            for t in 0..m {
                let z = Cyclotomic::root_of_unity(m, -((j * t) as i64))?;
                acc += &(&chi.values[powers[t as usize]] * &z);
            }
            let n_j = acc
                .as_rational()
                .map(|q| q / BigRational::from_integer(BigInt::from(m)))
                .filter(|q| q.is_integer() && !q.is_negative())
                .ok_or_else(|| Error::input("class function is not a character"))?;
            exponent_sum += n_j.to_integer() * BigInt::from(j);
        }
        let e = (exponent_sum % BigInt::from(m)).to_u64().expect("reduced");
        order = lcm(order, m / num_integer::gcd(m, e));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{Group, Permutation};

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s3() -> GroupRef {
        Group::from_generators(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Cyclotomic> {
        v.iter().map(|&x| Cyclotomic::from_integer(x)).collect()
    }

    #[test]
    fn s3_inner_products() {
        let g = s3();
        let t = character_table(&g);
        let triv = &t.irreducibles()[0];
        let sgn = &t.irreducibles()[1];
        let chi2 = &t.irreducibles()[2];
        assert!(triv.is_trivial());
        assert_eq!(sgn.values(), ints(&[1, -1, 1]).as_slice());
        assert_eq!(chi2.values(), ints(&[2, 0, -1]).as_slice());
        assert!(inner_product(triv, sgn).unwrap().is_zero());
        assert!(inner_product(chi2, chi2).unwrap().is_one());
        assert_eq!(&tensor(sgn, sgn).unwrap(), triv);
        assert_eq!(&tensor(sgn, chi2).unwrap(), chi2);
    }

    #[test]
    fn induction_from_c3() {
        let g = s3();
        let c3 = g.subgroup_generated(&[perm(3, &[&[1, 2, 3]])]).unwrap();
        let t = character_table(&g);
        let perm_char = induce(&Character::trivial(&c3), &g).unwrap();
        let sum = add(&t.irreducibles()[0], &t.irreducibles()[1]).unwrap();
        assert_eq!(perm_char, sum);
        let delta = character_table(&c3).irreducibles()[1].clone();
        assert_eq!(&induce(&delta, &g).unwrap(), &t.irreducibles()[2]);
        let cons = constituents(&t.irreducibles()[2], &c3).unwrap();
        assert_eq!(cons.len(), 2);
        assert!(cons.iter().all(|(c, m)| *m == 1 && !c.is_trivial()));
    }

    #[test]
    fn determinant_orders() {
        let g = s3();
        let t = character_table(&g);
        let orders: Vec<u64> = t.irreducibles().iter().map(|c| determinant_order(c).unwrap()).collect();
        assert_eq!(orders, vec![1, 2, 2]);
    }

    #[test]
    fn extension_checks() {
        let g = s3();
        let c3 = g.subgroup_generated(&[perm(3, &[&[1, 2, 3]])]).unwrap();
        let t = character_table(&g);
        let delta = character_table(&c3).irreducibles()[1].clone();
        assert!(extends(&Character::trivial(&c3), &t.irreducibles()[0]).unwrap());
        assert!(!extends(&delta, &t.irreducibles()[0]).unwrap());
        assert!(!extends(&delta, &t.irreducibles()[1]).unwrap());
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let g = s3();
        let c3 = g.subgroup_generated(&[perm(3, &[&[1, 2, 3]])]).unwrap();
        let err = inner_product(&Character::trivial(&g), &Character::trivial(&c3));
        assert!(matches!(err, Err(Error::Input(_))));
    }
}

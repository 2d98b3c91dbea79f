//! Slow, independent reference computations used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use liftlab::chartab::character_table;
use liftlab::numtheory::gcd;
use liftlab::{Cyclotomic, Group, GroupRef, Permutation};
use num_bigint::BigInt;
use num_rational::BigRational;

pub struct Elements {
    pub els: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
}

impl Elements {
    pub fn of(g: &GroupRef) -> Self {
        let els = g.elements().to_vec();
        let index = els.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        Elements { els, index }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.els[a] * &self.els[b])]
    }
}

/// Conjugacy classes by direct orbit computation, as sorted element-index sets.
pub fn brute_classes(g: &GroupRef) -> Vec<Vec<usize>> {
    let e = Elements::of(g);
    let mut seen = vec![false; e.els.len()];
    let mut out = Vec::new();
    for i in 0..e.els.len() {
        if seen[i] {
            continue;
        }
        let mut class: Vec<usize> = e
            .els
            .iter()
            .map(|y| e.index[&e.els[i].conjugate_by(y)])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        class.sort_unstable();
        for &c in &class {
            seen[c] = true;
        }
        out.push(class);
    }
    out
}

fn close(e: &Elements, start: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = start.clone();
    loop {
        let mut grew = false;
        let current: Vec<usize> = set.iter().copied().collect();
        for &a in &current {
            for &b in &current {
                if set.insert(e.mul(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Every subgroup, found by adjoining one element at a time until nothing new appears.
pub fn brute_subgroups(g: &GroupRef) -> BTreeSet<BTreeSet<usize>> {
    brute_subgroups_of(&Elements::of(g))
}

fn brute_subgroups_of(e: &Elements) -> BTreeSet<BTreeSet<usize>> {
    let trivial: BTreeSet<usize> = close(e, &BTreeSet::from([0]));
    let mut all = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in 0..e.els.len() {
            if h.contains(&x) {
                continue;
            }
            let mut gens = h.clone();
            gens.insert(x);
            let k = close(e, &gens);
            if all.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    all
}

/// Class functions stored on the library's class order.
pub type Row = Vec<Cyclotomic>;

struct Ctx {
    order: usize,
    sizes: Vec<usize>,
    inverse: Vec<usize>,
    square: Vec<usize>,
    exponent: u64,
}

impl Ctx {
    fn inner(&self, a: &Row, b: &Row) -> BigRational {
        let mut s = Cyclotomic::zero();
        for k in 0..a.len() {
            s += &(&a[k] * &b[self.inverse[k]]).scale(&BigRational::from_integer(BigInt::from(self.sizes[k])));
        }
        let q = s.as_rational().expect("inner products are rational");
        q / BigRational::from_integer(BigInt::from(self.order))
    }

    fn reduce(&self, mut psi: Row, irr: &[Row]) -> Row {
        for chi in irr {
            let m = self.inner(&psi, chi);
            if m != BigRational::from_integer(BigInt::from(0)) {
                psi = psi.iter().zip(chi).map(|(a, b)| a - &b.scale(&m)).collect();
            }
        }
        psi
    }

    fn add(&self, irr: &mut Vec<Row>, chi: Row) {
        let mut pending = vec![chi];
        while let Some(chi) = pending.pop() {
            if irr.contains(&chi) {
                continue;
            }
            for k in 1..=self.exponent as i64 {
                if gcd(k as u64, self.exponent) == 1 {
                    let conj: Row = chi.iter().map(|v| v.galois(k).expect("in field")).collect();
                    if !irr.contains(&conj) && !pending.contains(&conj) && conj != chi {
                        pending.push(conj);
                    }
                }
            }
            irr.push(chi);
        }
    }

    fn degree_sq(&self, irr: &[Row]) -> usize {
        irr.iter()
            .map(|r| {
                let d = r[0].as_integer().expect("integer degree");
                usize::try_from(d).expect("positive").pow(2)
            })
            .sum()
    }

    fn offer(&self, irr: &mut Vec<Row>, psi: Row) -> Option<Row> {
        let r = self.reduce(psi, irr);
        let one = BigRational::from_integer(BigInt::from(1));
        let norm = self.inner(&r, &r);
        if norm == one {
            let d = r[0].as_integer().expect("integer degree");
            let r = if d < BigInt::from(0) {
                r.iter().map(|v| -v).collect()
            } else {
                r
            };
            self.add(irr, r);
            None
        } else if norm.is_integer() && norm > BigRational::from_integer(BigInt::from(0)) {
            Some(r)
        } else {
            None
        }
    }
}

/// Irreducible characters by peeling induced, tensor and symmetric/alternating
/// square characters. Rows are sorted; the result is `None` if peeling stalls.
pub fn oracle_table(g: &GroupRef) -> Option<Vec<Row>> {
    let e = Elements::of(g);
    let classes = g.classes();
    let h = classes.len();
    let class_of: Vec<usize> = (0..e.els.len()).map(|i| g.class_of(&e.els[i]).unwrap()).collect();
    let ctx = Ctx {
        order: e.els.len(),
        sizes: classes.iter().map(|c| c.size).collect(),
        inverse: classes
            .iter()
            .map(|c| g.class_of(&c.representative.inverse()).unwrap())
            .collect(),
        square: classes
            .iter()
            .map(|c| g.class_of(&c.representative.pow(2)).unwrap())
            .collect(),
        exponent: g.exponent(),
    };

    let mut candidates: Vec<Row> = Vec::new();
    if let Some(x) = e.els.iter().find(|x| x.order() as usize == e.els.len()) {
        // Cyclic: the linear characters are immediate.
        let n = x.order();
        return Some(sorted(
            (0..n as i64)
                .map(|k| {
                    classes
                        .iter()
                        .map(|cl| {
                            let j = (0..n).find(|&j| x.pow(j as i64) == cl.representative).unwrap();
                            Cyclotomic::root_of_unity(n, j as i64 * k).unwrap()
                        })
                        .collect()
                })
                .collect(),
        ));
    }
    for sub in subgroup_classes(&e) {
        if sub.len() == e.els.len() {
            continue;
        }
        let gens: Vec<Permutation> = sub.iter().map(|&i| e.els[i].clone()).collect();
        let hg = Group::from_generators(g.degree(), &gens).unwrap();
        for theta in oracle_table(&hg)? {
            let row: Row = classes
                .iter()
                .map(|cl| {
                    let mut s = Cyclotomic::zero();
                    for y in &e.els {
                        let z = cl.representative.conjugate_by(y);
                        if let Some(k) = hg.class_of(&z) {
                            s += &theta[k];
                        }
                    }
                    s.scale(&BigRational::new(BigInt::from(1), BigInt::from(hg.order())))
                })
                .collect();
            candidates.push(row);
        }
    }
    let _ = class_of;

    let mut irr: Vec<Row> = vec![vec![Cyclotomic::one(); h]];
    let mut leftovers: Vec<Row> = Vec::new();
    for psi in candidates {
        if let Some(r) = ctx.offer(&mut irr, psi) {
            leftovers.push(r);
        }
    }
    for _round in 0..6 {
        if ctx.degree_sq(&irr) == ctx.order {
            break;
        }
        let mut next: Vec<Row> = Vec::new();
        let snapshot = irr.clone();
        for a in &snapshot {
            let sym: Row = (0..h)
                .map(|k| (&(&a[k] * &a[k]) + &a[ctx.square[k]]).scale(&BigRational::new(1.into(), 2.into())))
                .collect();
            let alt: Row = (0..h)
                .map(|k| (&(&a[k] * &a[k]) - &a[ctx.square[k]]).scale(&BigRational::new(1.into(), 2.into())))
                .collect();
            next.push(sym);
            next.push(alt);
            for b in snapshot.iter().chain(&leftovers) {
                next.push((0..h).map(|k| &a[k] * &b[k]).collect());
            }
        }
        next.append(&mut leftovers);
        for psi in next {
            if let Some(r) = ctx.offer(&mut irr, psi) {
                if !leftovers.contains(&r) {
                    leftovers.push(r);
                }
            }
        }
        // Integer combinations of characters with norm 1 are irreducible up to sign.
        let pool: Vec<Row> = leftovers.iter().map(|r| ctx.reduce(r.clone(), &irr)).collect();
        let n = pool.len().min(40);
        for i in 0..n {
            for j in i + 1..n {
                for sj in [1i64, -1] {
                    let two: Row = (0..h)
                        .map(|k| &pool[i][k] + &pool[j][k].scale(&BigRational::from_integer(sj.into())))
                        .collect();
                    let _ = ctx.offer(&mut irr, two.clone());
                    for l in j + 1..n {
                        for sl in [1i64, -1] {
                            let three: Row = (0..h)
                                .map(|k| &two[k] + &pool[l][k].scale(&BigRational::from_integer(sl.into())))
                                .collect();
                            let _ = ctx.offer(&mut irr, three);
                        }
                    }
                }
            }
        }
    }
    if ctx.degree_sq(&irr) != ctx.order || irr.len() != h {
        return None;
    }
    Some(sorted(irr))
}

fn sorted(mut rows: Vec<Row>) -> Vec<Row> {
    rows.sort();
    rows
}

/// One representative per conjugacy class of subgroups.
fn subgroup_classes(e: &Elements) -> Vec<BTreeSet<usize>> {
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut reps = Vec::new();
    for h in brute_subgroups_of(e) {
        if seen.contains(&h) {
            continue;
        }
        for y in &e.els {
            seen.insert(h.iter().map(|&i| e.index[&e.els[i].conjugate_by(y)]).collect());
        }
        reps.push(h);
    }
    reps
}

/// The library's table as sorted rows, for comparison with [`oracle_table`].
pub fn library_rows(g: &GroupRef) -> Vec<Row> {
    let mut rows: Vec<Row> = character_table(g)
        .irreducibles()
        .iter()
        .map(|chi| chi.values().to_vec())
        .collect();
    rows.sort();
    rows
}

pub mod checks;

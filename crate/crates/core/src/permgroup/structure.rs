use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::memo::MemoKey;
use crate::numtheory::{gcd, is_prime, p_part, PrimeSet};

use super::group::{order_bound, Group, GroupRef};
use super::perm::Permutation;

type Subgroups = Arc<Vec<GroupRef>>;

impl Group {
    /// Closure of a set of element indices under multiplication.
    pub(crate) fn close_indices(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul_idx(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The subgroup whose elements are the given (sorted) indices.
    pub(crate) fn subgroup_from_indices(&self, idx: &[usize]) -> GroupRef {
        let elements: Vec<Permutation> = idx.iter().map(|&i| self.element(i).clone()).collect();
        Group::intern(self.degree(), elements)
    }

    pub(crate) fn indices_of(&self, h: &Group) -> Vec<usize> {
        let mut v: Vec<usize> = h
            .elements()
            .iter()
            .map(|x| self.index_of(x).expect("subgroup element"))
            .collect();
        v.sort_unstable();
        v
    }

    fn check_subgroup(&self, h: &Group) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(Error::input("argument is not a subgroup of this group"))
        }
    }

    /// Subgroup generated by elements of `self`.
    pub fn subgroup_generated(&self, gens: &[Permutation]) -> Result<GroupRef> {
        let idx: Vec<usize> = gens
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::input(format!("{g} is not an element of the group")))
            })
            .collect::<Result<_>>()?;
        Ok(self.subgroup_from_indices(&self.close_indices(&idx)))
    }

    /// `⟨A, B⟩` for subgroups of `self`.
    pub fn join(&self, a: &Group, b: &Group) -> Result<GroupRef> {
        self.check_subgroup(a)?;
        self.check_subgroup(b)?;
        let gens: Vec<Permutation> = a.generators().iter().chain(b.generators()).cloned().collect();
        self.subgroup_generated(&gens)
    }

    pub fn intersection(&self, a: &Group, b: &Group) -> Result<GroupRef> {
        self.check_subgroup(a)?;
        self.check_subgroup(b)?;
        let idx: Vec<usize> = a
            .elements()
            .iter()
            .filter(|x| b.contains(x))
            .map(|x| self.index_of(x).expect("contained"))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Ok(self.subgroup_from_indices(&idx))
    }

    /// A Sylow `p`-subgroup, grown one factor `p` at a time inside normalizers.
    /// Returns the trivial subgroup when `p` does not divide the order.
    pub fn sylow(&self, p: u64) -> Result<GroupRef> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let g = self.memo.get_or(MemoKey::new("sylow", &[p]), || {
            let target = p_part(self.order() as u64, p) as usize;
            let mut gens: Vec<usize> = Vec::new();
            let mut current = vec![0usize];
            while current.len() < target {
                let members: HashSet<usize> = current.iter().copied().collect();
                let next = (0..self.order())
                    .filter(|x| !members.contains(x))
                    .find(|&x| {
                        let normalizes = current.iter().all(|&h| members.contains(&self.conj_idx(h, x)));
                        normalizes && {
                            let mut y = 0;
                            for _ in 0..p {
                                y = self.mul_idx(y, x);
                            }
                            members.contains(&y)
                        }
                    })
                    .expect("a non-Sylow p-subgroup has p dividing its normalizer index");
                gens.push(next);
                current = self.close_indices(&gens);
            }
            self.subgroup_from_indices(&current)
        });
        Ok(Arc::clone(&g))
    }

    pub fn normalizer(&self, h: &Group) -> Result<GroupRef> {
        self.check_subgroup(h)?;
        let idx: Vec<usize> = (0..self.order())
            .filter(|&x| {
                let gx = self.element(x);
                h.generators().iter().all(|k| h.contains(&k.conjugate_by(gx)))
            })
            .collect();
        Ok(self.subgroup_from_indices(&idx))
    }

    pub fn centralizer(&self, x: &Permutation) -> Result<GroupRef> {
        let xi = self
            .index_of(x)
            .ok_or_else(|| Error::input(format!("{x} is not an element of the group")))?;
        let idx: Vec<usize> = (0..self.order())
            .filter(|&g| self.mul_idx(g, xi) == self.mul_idx(xi, g))
            .collect();
        Ok(self.subgroup_from_indices(&idx))
    }

    pub fn is_normal(&self, h: &Group) -> bool {
        h.is_subgroup_of(self)
            && self
                .generators()
                .iter()
                .all(|g| h.generators().iter().all(|k| h.contains(&k.conjugate_by(g))))
    }

    /// Commutator subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> GroupRef {
        let g = self.memo.get_or(MemoKey::new("derived", &[]), || {
            let gens = self.generators();
            let mut idx: Vec<usize> = Vec::new();
            for a in gens {
                for b in gens {
                    let c = Permutation::commutator(a, b);
                    idx.push(self.index_of(&c).expect("closed"));
                }
            }
            let mut current = self.close_indices(&idx);
            loop {
                let members: HashSet<usize> = current.iter().copied().collect();
                let extra: Vec<usize> = current
                    .iter()
                    .flat_map(|&k| gens.iter().map(move |g| (k, self.index_of(g).expect("generator"))))
                    .map(|(k, g)| self.conj_idx(k, g))
                    .filter(|y| !members.contains(y))
                    .collect();
                if extra.is_empty() {
                    break;
                }
                idx.extend(extra);
                current = self.close_indices(&idx);
            }
            self.subgroup_from_indices(&current)
        });
        Arc::clone(&g)
    }

    pub fn conjugate_subgroup(&self, h: &Group, g: &Permutation) -> Result<GroupRef> {
        self.check_subgroup(h)?;
        if !self.contains(g) {
            return Err(Error::input(format!("{g} is not an element of the group")));
        }
        let gens: Vec<Permutation> = h.generators().iter().map(|k| k.conjugate_by(g)).collect();
        self.subgroup_generated(&gens)
    }

    /// Some `g` with `A^g = B`, scanning elements in canonical order.
    pub fn conjugating_element(&self, a: &Group, b: &Group) -> Option<Permutation> {
        if a.order() != b.order() {
            return None;
        }
        self.elements()
            .iter()
            .find(|g| a.generators().iter().all(|k| b.contains(&k.conjugate_by(g))))
            .cloned()
    }

    pub fn are_conjugate(&self, a: &Group, b: &Group) -> bool {
        self.conjugating_element(a, b).is_some()
    }

    fn conjugate_indices(&self, k: &[usize], g: usize) -> Vec<usize> {
        let mut v: Vec<usize> = k.iter().map(|&x| self.conj_idx(x, g)).collect();
        v.sort_unstable();
        v
    }

    /// Least conjugate of `k` (as a sorted index list).
    fn canonical_conjugate(&self, k: &[usize]) -> Vec<usize> {
        (0..self.order())
            .map(|g| self.conjugate_indices(k, g))
            .min()
            .expect("nonempty group")
    }

    fn check_capacity(&self) -> Result<()> {
        let bound = order_bound();
        if self.order() > bound {
            return Err(Error::Capacity {
                order: self.order(),
                bound,
            });
        }
        Ok(())
    }

    /// One representative per conjugacy class of subgroups, ordered by
    /// subgroup order and then by element list. Each representative is the
    /// least member of its class.
    pub fn subgroups_up_to_conjugacy(&self) -> Result<Subgroups> {
        self.check_capacity()?;
        Ok(self.memo.get_or(MemoKey::new("lattice", &[]), || {
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let trivial = vec![0usize];
            seen.insert(trivial.clone());
            let mut reps: Vec<(Vec<usize>, Vec<usize>)> = vec![(trivial, Vec::new())];
            let mut head = 0;
            while head < reps.len() {
                let (elems, gens) = reps[head].clone();
                head += 1;
                let members: HashSet<usize> = elems.iter().copied().collect();
                let mut local: HashSet<Vec<usize>> = HashSet::new();
                for x in 0..self.order() {
                    if members.contains(&x) {
                        continue;
                    }
                    let mut g2 = gens.clone();
                    g2.push(x);
                    let k = self.close_indices(&g2);
                    if !local.insert(k.clone()) {
                        continue;
                    }
                    let key = self.canonical_conjugate(&k);
                    if seen.insert(key.clone()) {
                        // regenerate from the canonical conjugate so stored gens match
                        let g_key = (0..self.order())
                            .find(|&g| self.conjugate_indices(&k, g) == key)
                            .expect("key is a conjugate");
                        let gens_key: Vec<usize> = g2.iter().map(|&y| self.conj_idx(y, g_key)).collect();
                        reps.push((key, gens_key));
                    }
                }
            }
            let mut keys: Vec<Vec<usize>> = reps.into_iter().map(|(e, _)| e).collect();
            keys.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            keys.iter().map(|k| self.subgroup_from_indices(k)).collect()
        }))
    }

    /// Every subgroup, ordered by order and element list.
    pub fn all_subgroups(&self) -> Result<Subgroups> {
        let reps = self.subgroups_up_to_conjugacy()?;
        Ok(self.memo.get_or(MemoKey::new("all_subgroups", &[]), || {
            let mut all: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
            for h in reps.iter() {
                let k = self.indices_of(h);
                for g in 0..self.order() {
                    all.insert((k.len(), self.conjugate_indices(&k, g)));
                }
            }
            all.into_iter().map(|(_, k)| self.subgroup_from_indices(&k)).collect()
        }))
    }

    pub fn normal_subgroups(&self) -> Result<Subgroups> {
        let reps = self.subgroups_up_to_conjugacy()?;
        Ok(self.memo.get_or(MemoKey::new("normal", &[]), || {
            reps.iter().filter(|h| self.is_normal(h)).cloned().collect()
        }))
    }

    /// Subnormal subgroups, found by descending through normal subgroups of
    /// normal subgroups.
    pub fn subnormal_subgroups(&self) -> Result<Subgroups> {
        if let Some(v) = self.memo_peek_subnormal() {
            return Ok(v);
        }
        let top = self.subgroup_from_indices(&(0..self.order()).collect::<Vec<_>>());
        let mut found: Vec<GroupRef> = vec![Arc::clone(&top)];
        let mut keys: HashSet<Vec<Permutation>> = HashSet::from([top.elements().to_vec()]);
        let mut head = 0;
        while head < found.len() {
            let x = Arc::clone(&found[head]);
            head += 1;
            for n in x.normal_subgroups()?.iter() {
                if keys.insert(n.elements().to_vec()) {
                    found.push(Arc::clone(n));
                }
            }
        }
        found.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        Ok(self.memo.get_or(MemoKey::new("subnormal", &[]), || found))
    }

    fn memo_peek_subnormal(&self) -> Option<Subgroups> {
        self.memo
            .get_or_try::<Vec<GroupRef>, _>(MemoKey::new("subnormal", &[]), || Err(Error::internal("not cached")))
            .ok()
    }

    /// Orders of the composition factors, top to bottom.
    pub fn composition_factor_orders(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = self.subgroup_from_indices(&(0..self.order()).collect::<Vec<_>>());
        while current.order() > 1 {
            let normals = current.normal_subgroups()?;
            let maximal = normals
                .iter()
                .filter(|n| n.order() < current.order())
                .max_by_key(|n| n.order())
                .cloned()
                .expect("the trivial subgroup is normal");
            out.push(current.order() / maximal.order());
            current = maximal;
        }
        Ok(out)
    }

    /// Every composition factor is a π-group or a π'-group.
    pub fn is_pi_separable(&self, pi: &PrimeSet) -> Result<bool> {
        let comp = pi.complement();
        Ok(self
            .composition_factor_orders()?
            .into_iter()
            .all(|f| pi.is_pi_number(f as u64) || comp.is_pi_number(f as u64)))
    }

    /// Every composition factor has order `p` or order prime to `p`.
    pub fn is_p_solvable(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(self
            .composition_factor_orders()?
            .into_iter()
            .all(|f| f as u64 == p || gcd(f as u64, p) == 1))
    }

    /// `O_{p'}(G)`: the largest normal subgroup of order prime to `p`.
    pub fn p_prime_core(&self, p: u64) -> Result<GroupRef> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(self
            .normal_subgroups()?
            .iter()
            .filter(|n| !(n.order() as u64).is_multiple_of(p))
            .max_by_key(|n| n.order())
            .cloned()
            .expect("trivial subgroup qualifies"))
    }

    /// The least `G`-conjugate of a subgroup, as a canonical class representative.
    pub fn canonical_subgroup(&self, h: &Group) -> Result<GroupRef> {
        self.check_subgroup(h)?;
        Ok(self.subgroup_from_indices(&self.canonical_conjugate(&self.indices_of(h))))
    }

    /// Some `g ∈ G` with `small^g ≤ big`.
    pub fn conjugate_into(&self, small: &Group, big: &Group) -> Option<Permutation> {
        if !big.order().is_multiple_of(small.order()) {
            return None;
        }
        self.elements()
            .iter()
            .find(|g| small.generators().iter().all(|k| big.contains(&k.conjugate_by(g))))
            .cloned()
    }

    /// `H^g = g⁻¹ H g` for any permutation `g` of the same degree.
    pub fn conjugated(&self, g: &Permutation) -> GroupRef {
        let mut elements: Vec<Permutation> = self.elements().iter().map(|x| x.conjugate_by(g)).collect();
        elements.sort();
        Group::intern(self.degree(), elements)
    }

    /// `self` viewed as a subgroup of itself (same interned object).
    pub fn whole(&self) -> GroupRef {
        self.subgroup_from_indices(&(0..self.order()).collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s3() -> GroupRef {
        Group::from_generators(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap()
    }

    fn c3() -> GroupRef {
        Group::from_generators(3, &[perm(3, &[&[1, 2, 3]])]).unwrap()
    }

    fn a4() -> GroupRef {
        Group::from_generators(4, &[perm(4, &[&[1, 2, 3]]), perm(4, &[&[1, 2], &[3, 4]])]).unwrap()
    }

    #[test]
    fn sylow_subgroups_of_s3() {
        let g = s3();
        assert_eq!(g.sylow(3).unwrap().order(), 3);
        assert_eq!(g.sylow(2).unwrap().order(), 2);
        assert_eq!(g.sylow(5).unwrap().order(), 1);
        assert!(g.is_normal(&g.sylow(3).unwrap()));
        assert!(!g.is_normal(&g.sylow(2).unwrap()));
    }

    #[test]
    fn normalizer_and_centralizer() {
        let g = s3();
        let p = g.sylow(3).unwrap();
        assert_eq!(g.normalizer(&p).unwrap().order(), 6);
        let t = perm(3, &[&[1, 2]]);
        assert_eq!(g.centralizer(&t).unwrap().order(), 2);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(c3().derived_subgroup().order(), 1);
        assert_eq!(s3().derived_subgroup().order(), 3);
        assert_eq!(a4().derived_subgroup().order(), 4);
    }

    #[test]
    fn lattice_of_s3() {
        let reps = s3().subgroups_up_to_conjugacy().unwrap();
        let orders: Vec<usize> = reps.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(s3().all_subgroups().unwrap().len(), 6);
        let normal: Vec<usize> = s3().normal_subgroups().unwrap().iter().map(|h| h.order()).collect();
        assert_eq!(normal, vec![1, 3, 6]);
        assert_eq!(s3().subnormal_subgroups().unwrap().len(), 3);
    }

    #[test]
    fn subnormal_in_a4_includes_non_normal_involutions() {
        let g = a4();
        let sub = g.subnormal_subgroups().unwrap();
        let twos = sub.iter().filter(|h| h.order() == 2).count();
        assert_eq!(twos, 3);
        assert!(sub.iter().filter(|h| h.order() == 2).all(|h| !g.is_normal(h)));
    }

    #[test]
    fn solvability_and_cores() {
        let g = s3();
        assert!(g.is_p_solvable(3).unwrap());
        assert_eq!(g.p_prime_core(3).unwrap().order(), 1);
        assert_eq!(g.composition_factor_orders().unwrap(), vec![2, 3]);
        let c6 = Group::from_generators(6, &[perm(6, &[&[1, 2, 3, 4, 5, 6]])]).unwrap();
        assert_eq!(c6.p_prime_core(3).unwrap().order(), 2);
        let a5 = Group::from_generators(5, &[perm(5, &[&[1, 2, 3, 4, 5]]), perm(5, &[&[1, 2, 3]])]).unwrap();
        assert!(!a5.is_p_solvable(5).unwrap());
        assert_eq!(a5.composition_factor_orders().unwrap(), vec![60]);
    }

    #[test]
    fn conjugacy_of_subgroups() {
        let g = s3();
        let a = g.subgroup_generated(&[perm(3, &[&[1, 2]])]).unwrap();
        let b = g.subgroup_generated(&[perm(3, &[&[2, 3]])]).unwrap();
        let x = g.conjugating_element(&a, &b).unwrap();
        assert!(Arc::ptr_eq(&g.conjugate_subgroup(&a, &x).unwrap(), &b));
    }
}

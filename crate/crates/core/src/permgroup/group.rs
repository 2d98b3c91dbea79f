use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::memo::Memo;

use super::perm::Permutation;

/// Default cap on group orders handled by exhaustive enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 512;

static ORDER_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_ORDER_BOUND);

pub fn order_bound() -> usize {
    ORDER_BOUND.load(Ordering::Relaxed)
}

/// Changes the process-wide order bound used by element enumeration and
/// subgroup search.
pub fn set_order_bound(bound: usize) {
    ORDER_BOUND.store(bound.max(1), Ordering::Relaxed);
}

pub type GroupRef = Arc<Group>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
    pub element_order: u64,
    pub(crate) members: Vec<usize>,
}

impl ConjugacyClass {
    /// Indices (into [`Group::elements`]) of the class members.
    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

/// A finite permutation group with every element enumerated.
///
/// Groups are interned by element set: building the same set of permutations
/// twice yields the same `Arc`. Elements are stored in ascending order of their
/// image lists, so the identity is always element 0 and every derived choice
/// (generators, class representatives, Sylow subgroups) depends only on the
/// element set.
pub struct Group {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generators: Vec<Permutation>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse: Vec<usize>,
    exponent: u64,
    mul_table: OnceLock<Vec<u32>>,
    pub(crate) memo: Memo,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn intern_table() -> &'static Mutex<HashMap<(usize, Vec<Permutation>), GroupRef>> {
    static TABLE: OnceLock<Mutex<HashMap<(usize, Vec<Permutation>), GroupRef>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn enumerate(degree: usize, gens: &[Permutation], bound: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(Error::Capacity {
                        order: seen.len() + 1,
                        bound,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

impl Group {
    /// Generates the group on `{1..degree}`; the result is interned.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<GroupRef> {
        Self::from_generators_with_bound(degree, gens, order_bound())
    }

    pub fn from_generators_with_bound(degree: usize, gens: &[Permutation], bound: usize) -> Result<GroupRef> {
        if degree == 0 {
            return Err(Error::input("degree-0 groups are not supported"));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::input(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let elements = enumerate(degree, gens, bound)?;
        Ok(Self::intern(degree, elements))
    }

    pub fn trivial(degree: usize) -> Result<GroupRef> {
        Self::from_generators(degree, &[])
    }

    /// Interns a sorted, closed element list.
    pub(crate) fn intern(degree: usize, elements: Vec<Permutation>) -> GroupRef {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let key = (degree, elements);
        if let Some(g) = intern_table().lock().expect("intern poisoned").get(&key) {
            return Arc::clone(g);
        }
        let group = Arc::new(Group::build(degree, key.1.clone()));
        let mut table = intern_table().lock().expect("intern poisoned");
        Arc::clone(table.entry(key).or_insert(group))
    }

    fn build(degree: usize, elements: Vec<Permutation>) -> Group {
        let index: HashMap<Permutation, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverse: Vec<usize> = elements.iter().map(|x| index[&x.inverse()]).collect();

        // greedy generating set over the sorted element list
        let mut generators = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([elements[0].clone()]);
        for x in &elements {
            if !span.contains(x) {
                generators.push(x.clone());
                span = enumerate(degree, &generators, usize::MAX)
                    .expect("unbounded enumeration")
                    .into_iter()
                    .collect();
            }
        }

        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = &elements[members[head]];
                head += 1;
                for g in &generators {
                    let y = index[&x.conjugate_by(g)];
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| {
                let representative = elements[members[0]].clone();
                ConjugacyClass {
                    element_order: representative.order(),
                    size: members.len(),
                    representative,
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.element_order, a.size, &a.representative).cmp(&(b.element_order, b.size, &b.representative))
        });
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        let exponent = classes
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.element_order));

        Group {
            degree,
            elements,
            index,
            generators,
            classes,
            class_of,
            inverse,
            exponent,
            mul_table: OnceLock::new(),
            memo: Memo::default(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.index.contains_key(x)
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.index_of(x).map(|i| self.class_of[i])
    }

    pub(crate) fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Class of `g⁻¹` for each class of `g`.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of[self.inverse[c.members[0]]])
            .collect()
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.order() / self.classes[class].size
    }

    /// Class of `g^k` for a representative `g` of each class.
    pub fn power_map(&self, k: i64) -> Vec<usize> {
        self.classes.iter().map(|c| self.power_class(c, k)).collect()
    }

    fn power_class(&self, c: &ConjugacyClass, k: i64) -> usize {
        let m = c.element_order as i64;
        let x = c.representative.pow(k.rem_euclid(m));
        self.class_of(&x).expect("powers stay in the group")
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    /// Same element set; interning makes this a pointer comparison in practice.
    pub fn same_as(&self, other: &Group) -> bool {
        std::ptr::eq(self, other) || (self.degree == other.degree && self.elements == other.elements)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// For each class of `self`, the class of `parent` containing it.
    pub fn fusion_into(&self, parent: &Group) -> Result<Vec<usize>> {
        if !self.is_subgroup_of(parent) {
            return Err(Error::input("group is not a subgroup of the given parent"));
        }
        Ok(self
            .classes
            .iter()
            .map(|c| parent.class_of(&c.representative).expect("contained"))
            .collect())
    }

    /// Flat `|G| x |G|` table of element-index products.
    pub(crate) fn mul_table(&self) -> &[u32] {
        self.mul_table.get_or_init(|| {
            let n = self.order();
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    t.push(self.index[&a.compose(b)] as u32);
                }
            }
            t
        })
    }

    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.mul_table()[a * self.order() + b] as usize
    }

    /// Index of `g⁻¹ x g`.
    pub(crate) fn conj_idx(&self, x: usize, g: usize) -> usize {
        self.mul_idx(self.mul_idx(self.inverse[g], x), g)
    }
}

/// A subgroup together with its class fusion into the parent.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub parent: GroupRef,
    pub group: GroupRef,
    fusion: Arc<[usize]>,
}

impl Subgroup {
    pub fn new(parent: &GroupRef, group: &GroupRef) -> Result<Self> {
        let fusion = group.fusion_into(parent)?;
        Ok(Subgroup {
            parent: Arc::clone(parent),
            group: Arc::clone(group),
            fusion: fusion.into(),
        })
    }

    /// Parent class of each subgroup class.
    pub fn fusion(&self) -> &[usize] {
        &self.fusion
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.group.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let g = Group::from_generators(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.class_count(), 3);
        let orders: Vec<u64> = g.classes().iter().map(|c| c.element_order).collect();
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(orders, vec![1, 2, 3]);
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(g.exponent(), 6);
        assert!(g.identity().is_identity());
    }

    #[test]
    fn trivial_group_at_degree_one() {
        let g = Group::trivial(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.class_count(), 1);
        assert!(Group::from_generators(0, &[]).is_err());
    }

    #[test]
    fn interning_by_element_set() {
        let a = Group::from_generators(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap();
        let b = Group::from_generators(3, &[perm(3, &[&[2, 3]]), perm(3, &[&[1, 3]])]).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn power_maps_on_small_groups() {
        let s3 = Group::from_generators(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.power_map(1), vec![0, 1, 2]);
        assert_eq!(s3.power_map(2), vec![0, 0, 2]);
        let c3 = Group::from_generators(3, &[perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(c3.power_map(2), vec![0, 2, 1]);
    }

    #[test]
    fn capacity_error_names_the_bound() {
        let s6 = [perm(6, &[&[1, 2]]), perm(6, &[&[1, 2, 3, 4, 5, 6]])];
        match Group::from_generators_with_bound(6, &s6, 512) {
            Err(Error::Capacity { bound, .. }) => assert_eq!(bound, 512),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }
}

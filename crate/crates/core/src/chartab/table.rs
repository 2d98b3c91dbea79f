use std::sync::{Arc, OnceLock};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::memo::MemoKey;
use crate::permgroup::GroupRef;

use super::{determinant_order, dixon, inner_product, Character};

/// `Irr(G)`, rows ordered by degree and then by value list.
pub struct CharacterTable {
    group: GroupRef,
    irreducibles: Vec<Character>,
    det_orders: OnceLock<Vec<u64>>,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.irreducibles).finish()
    }
}

/// The character table of `group`, computed once per group.
pub fn character_table(group: &GroupRef) -> Arc<CharacterTable> {
    group.memo.get_or(MemoKey::new("chartab", &[]), || {
        let mut rows = dixon::dixon_rows(group)
            .unwrap_or_else(|e| panic!("character table of a group of order {}: {e}", group.order()));
        rows.sort_by(|a, b| {
            let da = a[0].as_integer().expect("integral degree");
            let db = b[0].as_integer().expect("integral degree");
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        let irreducibles = rows
            .into_iter()
            .map(|r| Character::new(group, r).expect("well-formed row"))
            .collect();
        CharacterTable {
            group: Arc::clone(group),
            irreducibles,
            det_orders: OnceLock::new(),
        }
    })
}

impl CharacterTable {
    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.degree()).collect()
    }

    pub fn position(&self, chi: &Character) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == chi)
    }

    /// Multiplicities `⟨θ, χ_i⟩` for each row.
    pub fn decompose(&self, theta: &Character) -> Result<Vec<BigRational>> {
        if !theta.group().same_as(&self.group) {
            return Err(Error::input("class function lives on a different group"));
        }
        self.irreducibles.iter().map(|chi| inner_product(theta, chi)).collect()
    }

    /// Determinantal order of each row.
    pub fn determinant_orders(&self) -> &[u64] {
        self.det_orders.get_or_init(|| {
            self.irreducibles
                .iter()
                .map(|c| determinant_order(c).expect("irreducible characters are characters"))
                .collect()
        })
    }
}

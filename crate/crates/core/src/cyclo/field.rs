//! Per-conductor tables: cyclotomic polynomials, reductions of `ζ_n^k` into the
//! power basis, and the linear maps between `Q(ζ_t)` and `Q(ζ_n)` for `t | n`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numtheory::euler_phi;

pub(crate) struct FieldData {
    pub n: u64,
    pub phi: usize,
    /// `power[k]` holds the power-basis coordinates of `ζ_n^k`, `0 <= k < n`,
    /// as sparse `(index, coefficient)` pairs.
    pub power: Vec<Vec<(usize, i64)>>,
    embeddings: RwLock<HashMap<u64, Arc<Embedding>>>,
}

/// The inclusion `Q(ζ_t) -> Q(ζ_n)` together with a left inverse on a
/// chosen set of pivot coordinates.
pub(crate) struct Embedding {
    pub t: u64,
    /// `columns[j]` = coordinates of `ζ_t^j` in the `n` basis.
    pub columns: Vec<Vec<(usize, i64)>>,
    pub pivots: Vec<usize>,
    /// `phi(t) x phi(t)` inverse of the pivot rows.
    pub inverse: Vec<Vec<BigRational>>,
}

fn registry() -> &'static RwLock<HashMap<u64, Arc<FieldData>>> {
    static REG: OnceLock<RwLock<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn field(n: u64) -> Arc<FieldData> {
    if let Some(f) = registry().read().expect("field registry poisoned").get(&n) {
        return Arc::clone(f);
    }
    let built = Arc::new(FieldData::build(n));
    let mut w = registry().write().expect("field registry poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
pub(crate) fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("poly cache poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_divide(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.write().expect("poly cache poisoned").insert(n, num.clone());
    num
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert!(lead == 1);
    let qlen = rem.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (k, &dk) in den.iter().enumerate() {
                rem[i + k] -= c * dk;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl FieldData {
    fn build(n: u64) -> FieldData {
        let phi = euler_phi(n) as usize;
        let poly = cyclotomic_polynomial(n);
        let mut power = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            power.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect(),
            );
            // multiply by x and reduce with x^phi = -sum poly[i] x^i
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        FieldData {
            n,
            phi,
            power,
            embeddings: RwLock::new(HashMap::new()),
        }
    }

    pub fn embedding(&self, t: u64) -> Arc<Embedding> {
        debug_assert!(self.n.is_multiple_of(t));
        if let Some(e) = self.embeddings.read().expect("poisoned").get(&t) {
            return Arc::clone(e);
        }
        let built = Arc::new(self.build_embedding(t));
        let mut w = self.embeddings.write().expect("poisoned");
        Arc::clone(w.entry(t).or_insert(built))
    }

    fn build_embedding(&self, t: u64) -> Embedding {
        let phi_t = euler_phi(t) as usize;
        let step = self.n / t;
        let columns: Vec<Vec<(usize, i64)>> = (0..phi_t as u64)
            .map(|j| self.power[((j * step) % self.n) as usize].clone())
            .collect();
        // dense copy of E for elimination
        let mut dense = vec![vec![BigRational::zero(); phi_t]; self.phi];
        for (j, col) in columns.iter().enumerate() {
            for &(i, c) in col {
                dense[i][j] = BigRational::from_integer(BigInt::from(c));
            }
        }
        // choose pivot rows greedily: a row joins if it is independent of the chosen ones
        let mut pivots = Vec::new();
        let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new(); // (lead col, reduced row)
        for (i, row) in dense.iter().enumerate() {
            let mut r = row.clone();
            for (lead, b) in &basis {
                if !r[*lead].is_zero() {
                    let f = r[*lead].clone() / b[*lead].clone();
                    for k in 0..phi_t {
                        let sub = &f * &b[k];
                        r[k] -= sub;
                    }
                }
            }
            if let Some(lead) = r.iter().position(|x| !x.is_zero()) {
                pivots.push(i);
                basis.push((lead, r));
                if pivots.len() == phi_t {
                    break;
                }
            }
        }
        assert_eq!(
            pivots.len(),
            phi_t,
            "embedding of conductor {t} into {} is not injective",
            self.n
        );
        let square: Vec<Vec<BigRational>> = pivots.iter().map(|&i| dense[i].clone()).collect();
        let inverse = invert(square);
        Embedding {
            t,
            columns,
            pivots,
            inverse,
        }
    }
}

fn invert(mut m: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular pivot block");
        m.swap(col, piv);
        inv.swap(col, piv);
        let scale = BigRational::one() / m[col][col].clone();
        for k in 0..n {
            m[col][k] *= &scale;
            inv[col][k] *= &scale;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..n {
                    let a = &f * &m[col][k];
                    m[r][k] -= a;
                    let b = &f * &inv[col][k];
                    inv[r][k] -= b;
                }
            }
        }
    }
    inv
}

//! Burnside–Dixon: simultaneous eigenvectors of the class-multiplication
//! matrices over `F_q`, lifted to cyclotomic values.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, mod_inverse, mod_pow, prime_divisors};
use crate::permgroup::Group;

/// Smallest prime `q ≡ 1 (mod e)` with `q > 2·√|G|·max class size`.
pub(crate) fn dixon_prime(group: &Group) -> u64 {
    let e = group.exponent();
    let order = group.order() as u128;
    let hmax = group.classes().iter().map(|c| c.size).max().unwrap_or(1) as u128;
    let mut q = e + 1;
    loop {
        let big = q as u128;
        if is_prime(q) && big * big > 4 * order * hmax * hmax {
            return q;
        }
        q += e;
    }
}

fn primitive_root(q: u64) -> u64 {
    let factors = prime_divisors(q - 1);
    (2..q)
        .find(|&g| factors.iter().all(|&r| mod_pow(g, (q - 1) / r, q) != 1))
        .expect("F_q^* is cyclic")
}

/// `c[j][k][l]`: number of `x ∈ K_j` with `x⁻¹ z_l ∈ K_k` for the
/// representative `z_l` of `K_l`.
fn structure_constants(group: &Group) -> Vec<Vec<Vec<u64>>> {
    let r = group.class_count();
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    let reps: Vec<usize> = group.classes().iter().map(|cl| cl.members()[0]).collect();
    for (j, class) in group.classes().iter().enumerate() {
        for &x in class.members() {
            let xinv = group.inverse_index(x);
            for (l, &z) in reps.iter().enumerate() {
                let y = group.mul_idx(xinv, z);
                c[j][group.class_of_index(y)][l] += 1;
            }
        }
    }
    c
}

/// Row-reduces in place and returns pivot columns; rows past the rank are dropped.
fn rref(rows: &mut Vec<Vec<u64>>, q: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = mod_inverse(rows[rank][col], q);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for k in 0..cols {
                    let v = rows[rank][k] * f % q;
                    rows[i][k] = (rows[i][k] + q - v) % q;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Basis of the null space of a square matrix over `F_q`.
fn kernel(mut m: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let pivots = rref(&mut m, q);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = (q - row[f]) % q;
            }
            v
        })
        .collect()
}

struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut basis: Vec<Vec<u64>>, q: u64) -> Self {
        let pivots = rref(&mut basis, q);
        Space { basis, pivots }
    }
}

/// Splits `F_q^r` into the common eigenlines of all class matrices.
fn eigenlines(c: &[Vec<Vec<u64>>], q: u64) -> Result<Vec<Vec<u64>>> {
    let r = c.len();
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
    let mut pending = vec![Space::new(identity, q)];
    let mut done = Vec::new();
    while let Some(space) = pending.pop() {
        if space.basis.len() == 1 {
            done.push(space.basis.into_iter().next().expect("one vector"));
            continue;
        }
        let mut split = None;
        for mj in c.iter().skip(1) {
            let d = space.basis.len();
            // a[i][k]: coordinate i of M_j b_k
            let images: Vec<Vec<u64>> = space
                .basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|k| (0..r).map(|l| mj[k][l] * b[l] % q).sum::<u64>() % q)
                        .collect()
                })
                .collect();
            let a: Vec<Vec<u64>> = (0..d)
                .map(|i| (0..d).map(|k| images[k][space.pivots[i]]).collect())
                .collect();
            let mut parts = Vec::new();
            let mut total = 0;
            for lambda in 0..q {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|k| if i == k { (a[i][k] + q - lambda) % q } else { a[i][k] })
                            .collect()
                    })
                    .collect();
                let ker = kernel(shifted, q);
                if ker.is_empty() {
                    continue;
                }
                total += ker.len();
                parts.push(ker);
                if total == d {
                    break;
                }
            }
            if total != d {
                return Err(Error::internal("class matrix is not diagonalizable over F_q"));
            }
            if parts.len() > 1 {
                split = Some(
                    parts
                        .into_iter()
                        .map(|ker| {
                            let vecs = ker
                                .iter()
                                .map(|u| {
                                    (0..r)
                                        .map(|x| {
                                            u.iter().zip(&space.basis).map(|(ui, b)| ui * b[x] % q).sum::<u64>() % q
                                        })
                                        .collect()
                                })
                                .collect();
                            Space::new(vecs, q)
                        })
                        .collect::<Vec<_>>(),
                );
                break;
            }
        }
        match split {
            Some(spaces) => pending.extend(spaces),
            None => return Err(Error::internal("class algebra did not split into lines")),
        }
    }
    Ok(done)
}

/// Character rows in class order, unsorted.
pub(crate) fn dixon_rows(group: &Group) -> Result<Vec<Vec<Cyclotomic>>> {
    let r = group.class_count();
    if r == 1 {
        return Ok(vec![vec![Cyclotomic::one()]]);
    }
    let q = dixon_prime(group);
    let c = structure_constants(group);
    let c_mod: Vec<Vec<Vec<u64>>> = c
        .iter()
        .map(|m| m.iter().map(|row| row.iter().map(|x| x % q).collect()).collect())
        .collect();
    let lines = eigenlines(&c_mod, q)?;
    if lines.len() != r {
        return Err(Error::internal("wrong number of characters"));
    }
    let order = group.order() as u64;
    let sizes: Vec<u64> = group.classes().iter().map(|cl| cl.size as u64 % q).collect();
    let inv_class = group.inverse_classes();
    let e = group.exponent();
    let z = mod_pow(primitive_root(q), (q - 1) / e, q);
    let power_maps: Vec<Vec<usize>> = (0..e).map(|k| group.power_map(k as i64)).collect();
    let max_degree = (order as f64).sqrt() as u64 + 1;

    let mut rows = Vec::with_capacity(r);
    for line in lines {
        if line[0] == 0 {
            return Err(Error::internal("eigenvector vanishes at the identity"));
        }
        let s = mod_inverse(line[0], q);
        let omega: Vec<u64> = line.iter().map(|x| x * s % q).collect();
        let norm = (0..r).fold(0u64, |acc, k| {
            (acc + omega[k] * omega[inv_class[k]] % q * mod_inverse(sizes[k], q)) % q
        });
        let d_sq = order % q * mod_inverse(norm, q) % q;
        let d = (1..=max_degree)
            .find(|&d| d * d % q == d_sq)
            .ok_or_else(|| Error::internal("no admissible degree"))?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|k| d * omega[k] % q * mod_inverse(sizes[k], q) % q)
            .collect();

        let mut row = Vec::with_capacity(r);
        for (k, class) in group.classes().iter().enumerate() {
            let m = class.element_order;
            let zm = mod_pow(z, e / m, q);
            let m_inv = mod_inverse(m % q, q);
            let mut counts = Vec::with_capacity(m as usize);
            for j in 0..m {
                let mut acc = 0u64;
                for t in 0..m {
                    let val = chi_mod[power_maps[t as usize][k]];
                    let root = mod_pow(zm, (m - (j * t) % m) % m, q);
                    acc = (acc + val * root) % q;
                }
                let n_j = acc * m_inv % q;
                if n_j > d {
                    return Err(Error::internal("eigenvalue multiplicity out of range"));
                }
                counts.push(BigRational::from_integer(BigInt::from(n_j)));
            }
            row.push(Cyclotomic::from_exponent_counts(m, &counts)?);
        }
        rows.push(row);
    }
    let sum_sq: i64 = rows
        .iter()
        .map(|row| {
            let d = row[0].as_integer().expect("integral degree");
            i64::try_from(&d * &d).expect("small")
        })
        .sum();
    if sum_sq as u64 != order {
        return Err(Error::internal("degrees do not account for the group order"));
    }
    Ok(rows)
}

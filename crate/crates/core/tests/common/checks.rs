//! Exact consistency checks, each returning a description of the first failure.

use liftlab::brauer::{brauer_table, restrict_to_p_regular};
use liftlab::chartab::{character_table, induce, inner_product, restrict};
use liftlab::{Cyclotomic, GroupRef};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::{brute_classes, brute_subgroups, library_rows, oracle_table};

pub type Check = Result<(), String>;

fn rat(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn classes_match(g: &GroupRef) -> Check {
    let mut brute = brute_classes(g);
    let mut lib: Vec<Vec<usize>> = g
        .classes()
        .iter()
        .map(|c| {
            let mut m = c.members().to_vec();
            m.sort_unstable();
            m
        })
        .collect();
    brute.sort();
    lib.sort();
    if brute == lib {
        Ok(())
    } else {
        Err(format!(
            "classes differ: {} brute vs {} library",
            brute.len(),
            lib.len()
        ))
    }
}

pub fn subgroup_count(g: &GroupRef) -> Check {
    let brute = brute_subgroups(g).len();
    let lib = g.all_subgroups().map_err(|e| e.to_string())?.len();
    if brute == lib {
        Ok(())
    } else {
        Err(format!("{brute} subgroups by closure, {lib} from the lattice"))
    }
}

pub fn degree_sum(g: &GroupRef) -> Check {
    let s: i64 = character_table(g).degrees().iter().map(|d| d * d).sum();
    if s as usize == g.order() {
        Ok(())
    } else {
        Err(format!("sum of squared degrees {s} != {}", g.order()))
    }
}

pub fn row_orthogonality(g: &GroupRef) -> Check {
    let irr = character_table(g).irreducibles().to_vec();
    for (i, a) in irr.iter().enumerate() {
        for (j, b) in irr.iter().enumerate() {
            let ip = inner_product(a, b).map_err(|e| e.to_string())?;
            if ip != rat(usize::from(i == j)) {
                return Err(format!("<X{i}, X{j}> = {ip}"));
            }
        }
    }
    Ok(())
}

pub fn column_orthogonality(g: &GroupRef) -> Check {
    let irr = character_table(g).irreducibles().to_vec();
    let h = g.class_count();
    for i in 0..h {
        for j in 0..h {
            let s: Cyclotomic = irr
                .iter()
                .map(|chi| chi.value(i) * &chi.value(j).complex_conjugate())
                .sum();
            let want = if i == j { g.centralizer_order(i) } else { 0 };
            if s != Cyclotomic::from_integer(want as i64) {
                return Err(format!("columns {i}, {j} give {s}"));
            }
        }
    }
    Ok(())
}

pub fn frobenius_reciprocity(g: &GroupRef) -> Check {
    let irr = character_table(g).irreducibles().to_vec();
    for h in g.subgroups_up_to_conjugacy().map_err(|e| e.to_string())?.iter() {
        for theta in character_table(h).irreducibles() {
            let up = induce(theta, g).map_err(|e| e.to_string())?;
            for chi in &irr {
                let down = restrict(chi, h).map_err(|e| e.to_string())?;
                let a = inner_product(&up, chi).map_err(|e| e.to_string())?;
                let b = inner_product(theta, &down).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("subgroup of order {}: {a} != {b}", h.order()));
                }
            }
        }
    }
    Ok(())
}

pub fn decomposition_reconstructs(g: &GroupRef, p: u64) -> Check {
    let bt = brauer_table(g, p).map_err(|e| e.to_string())?;
    for (chi, row) in character_table(g).irreducibles().iter().zip(&bt.decomposition) {
        let target = restrict_to_p_regular(chi, p);
        let mut sum = vec![Cyclotomic::zero(); target.values().len()];
        for (phi, &d) in bt.irreducibles.iter().zip(row) {
            for (s, v) in sum.iter_mut().zip(phi.values()) {
                *s += &v.scale(&rat(d as usize));
            }
        }
        if sum != target.values() {
            return Err(format!("row {row:?} does not rebuild {chi:?}"));
        }
    }
    let regular = liftlab::brauer::p_regular_classes(g, p).len();
    if bt.irreducibles.len() != regular {
        return Err(format!(
            "{} Brauer irreducibles for {regular} p-regular classes",
            bt.irreducibles.len()
        ));
    }
    Ok(())
}

pub fn matches_oracle(g: &GroupRef) -> Check {
    match oracle_table(g) {
        None => Err("reference construction did not complete".into()),
        Some(rows) if rows == library_rows(g) => Ok(()),
        Some(_) => Err("tables differ".into()),
    }
}

//! Small nonnegative-integer feasibility: `target = Σ c_i v_i`, `c_i ≥ 0`.

use num_rational::BigRational;
use num_traits::Zero;

/// One vector of the search: exact coordinates plus a positive weight
/// (the degree) used to bound coefficients.
#[derive(Debug, Clone)]
pub(crate) struct Item {
    pub coords: Vec<BigRational>,
    pub weight: u64,
}

/// First solution in lexicographically decreasing coefficient order, by
/// bounded depth-first search.
pub(crate) fn solve(items: &[Item], target: &[BigRational], target_weight: u64) -> Option<Vec<u64>> {
    let mut coeffs = vec![0u64; items.len()];
    let mut rest = target.to_vec();
    if search(items, 0, &mut rest, target_weight, &mut coeffs) {
        Some(coeffs)
    } else {
        None
    }
}

fn search(items: &[Item], i: usize, rest: &mut Vec<BigRational>, weight: u64, coeffs: &mut [u64]) -> bool {
    if weight == 0 {
        return rest.iter().all(Zero::is_zero);
    }
    if i == items.len() {
        return false;
    }
    let item = &items[i];
    let max = weight / item.weight;
    for _ in 0..max {
        sub_assign(rest, &item.coords);
    }
    let mut c = max;
    loop {
        coeffs[i] = c;
        if search(items, i + 1, rest, weight - c * item.weight, coeffs) {
            return true;
        }
        if c == 0 {
            break;
        }
        add_assign(rest, &item.coords);
        c -= 1;
    }
    coeffs[i] = 0;
    false
}

fn sub_assign(a: &mut [BigRational], b: &[BigRational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

fn add_assign(a: &mut [BigRational], b: &[BigRational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Rank over `Q` of a list of row vectors.
pub(crate) fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &m[r][col];
            for k in col..cols {
                let v = &m[r][k] * &f;
                m[i][k] -= v;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn finds_combination() {
        let items = vec![
            Item {
                coords: q(&[1, 1]),
                weight: 1,
            },
            Item {
                coords: q(&[1, -1]),
                weight: 1,
            },
        ];
        assert_eq!(solve(&items, &q(&[2, 0]), 2), Some(vec![1, 1]));
        assert_eq!(solve(&items, &q(&[3, -1]), 3), Some(vec![1, 2]));
        assert_eq!(solve(&items, &q(&[2, 1]), 2), None);
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&[q(&[1, 2]), q(&[2, 4])]), 1);
        assert_eq!(rank(&[q(&[1, 2]), q(&[0, 1])]), 2);
    }
}

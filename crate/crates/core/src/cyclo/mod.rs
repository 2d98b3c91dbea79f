//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` of the
//! smallest field `Q(ζ_n)` containing it, with `n ≢ 2 (mod 4)`. Since both
//! the conductor and the basis are canonical, equality is structural.

mod field;
mod galois;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, lcm, prime_divisors};

pub use galois::{is_p_rational, GaloisAutomorphism};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_n^k` in canonical form.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("root of unity of order 0"));
        }
        let kk = k.rem_euclid(n as i64) as u64;
        let g = gcd(kk, n);
        let (n, kk) = (n / g, kk / g);
        if n == 1 {
            return Ok(Self::one());
        }
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let m = n / 2;
            let j = (kk * m.div_ceil(2)) % m;
            let base = Self::root_of_unity(m, j as i64)?;
            return Ok(if kk % 2 == 1 { -base } else { base });
        }
        let f = field::field(n);
        let mut coeffs = vec![BigRational::zero(); f.phi];
        for &(i, c) in &f.power[kk as usize] {
            coeffs[i] = BigRational::from_integer(BigInt::from(c));
        }
        Ok(Cyclotomic { conductor: n, coeffs }.canonical())
    }

    /// Builds `Σ counts[j] ζ_m^j`.
    pub fn from_exponent_counts(m: u64, counts: &[BigRational]) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("conductor 0"));
        }
        if m % 4 == 2 {
            let mut acc = Self::zero();
            for (j, c) in counts.iter().enumerate() {
                if !c.is_zero() {
                    acc += &Self::root_of_unity(m, j as i64)?.scale(c);
                }
            }
            return Ok(acc);
        }
        let f = field::field(m);
        let mut coeffs = vec![BigRational::zero(); f.phi];
        for (j, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, e) in &f.power[j % m as usize] {
                coeffs[i] += c * BigRational::from_integer(BigInt::from(e));
            }
        }
        Ok(Cyclotomic { conductor: m, coeffs }.canonical())
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates with respect to `ζ_conductor`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois_unchecked(-1)
    }

    /// Applies `ζ ↦ ζ^k`; `k` must be a unit modulo the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        if gcd(k.rem_euclid(self.conductor as i64) as u64, self.conductor) != 1 {
            return Err(Error::input(format!(
                "{k} is not a unit modulo the conductor {}",
                self.conductor
            )));
        }
        Ok(self.galois_unchecked(k))
    }

    pub(crate) fn galois_unchecked(&self, k: i64) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.conductor;
        let kk = k.rem_euclid(n as i64) as u64;
        let f = field::field(n);
        let mut coeffs = vec![BigRational::zero(); f.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(t, e) in &f.power[((i as u64 * kk) % n) as usize] {
                coeffs[t] += c * BigRational::from_integer(BigInt::from(e));
            }
        }
        // automorphisms of Q(ζ_n) preserve the conductor
        Cyclotomic { conductor: n, coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(BigRational::one() / q));
        }
        let n = self.conductor as i64;
        let mut others = Self::one();
        for k in 2..n {
            if gcd(k as u64, n as u64) == 1 {
                others = &others * &self.galois_unchecked(k);
            }
        }
        let norm = (self * &others)
            .as_rational()
            .expect("norm of a cyclotomic is rational");
        Some(others.scale(&(BigRational::one() / norm)))
    }

    /// Coordinates of `self` inside `Q(ζ_m)` for a multiple `m` of the conductor.
    /// Coordinates in the power basis of `Q(ζ_m)`; `m` must be a multiple
    /// of the conductor and not `2 mod 4`.
    pub(crate) fn coordinates(&self, m: u64) -> Vec<BigRational> {
        assert!(
            m.is_multiple_of(self.conductor) && m % 4 != 2,
            "bad ambient conductor {m}"
        );
        self.lift(m)
    }

    fn lift(&self, m: u64) -> Vec<BigRational> {
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let f = field::field(m);
        let step = m / self.conductor;
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, e) in &f.power[((j as u64 * step) % m) as usize] {
                if e == 1 {
                    out[i] += c;
                } else {
                    out[i] += c * BigRational::from_integer(BigInt::from(e));
                }
            }
        }
        out
    }

    /// Moves to the smallest conductor whose field contains the value.
    fn canonical(mut self) -> Self {
        'outer: loop {
            if self.conductor == 1 {
                return self;
            }
            if self.coeffs[1..].iter().all(Zero::is_zero) {
                let q = self.coeffs.swap_remove(0);
                return Self::from_rational(q);
            }
            for q in prime_divisors(self.conductor) {
                let mut t = self.conductor / q;
                if t % 4 == 2 {
                    t /= 2;
                }
                if let Some(coeffs) = self.descend(t) {
                    self = Cyclotomic { conductor: t, coeffs };
                    continue 'outer;
                }
            }
            return self;
        }
    }

    fn descend(&self, t: u64) -> Option<Vec<BigRational>> {
        let f = field::field(self.conductor);
        let emb = f.embedding(t);
        let rhs: Vec<&BigRational> = emb.pivots.iter().map(|&i| &self.coeffs[i]).collect();
        let y: Vec<BigRational> = emb
            .inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&rhs)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * *b)
            })
            .collect();
        let mut back = vec![BigRational::zero(); f.phi];
        for (j, col) in emb.columns.iter().enumerate() {
            if y[j].is_zero() {
                continue;
            }
            for &(i, e) in col {
                back[i] += &y[j] * BigRational::from_integer(BigInt::from(e));
            }
        }
        debug_assert_eq!(emb.t, t);
        (back == self.coeffs).then_some(y)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let m = lcm(self.conductor, rhs.conductor);
        let mut a = self.lift(m);
        let b = rhs.lift(m);
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x += y;
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs: a,
        }
        .canonical()
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        let m = lcm(self.conductor, rhs.conductor);
        let (sa, sb) = (m / self.conductor, m / rhs.conductor);
        let mut acc = vec![BigRational::zero(); m as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = ((i as u64 * sa + j as u64 * sb) % m) as usize;
                acc[e] += a * b;
            }
        }
        let f = field::field(m);
        let mut coeffs = vec![BigRational::zero(); f.phi];
        for (e, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, k) in &f.power[e] {
                coeffs[i] += &c * BigRational::from_integer(BigInt::from(k));
            }
        }
        Cyclotomic { conductor: m, coeffs }.canonical()
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> std::iter::Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + x)
    }
}

/// Total order used for canonical sorting: smaller conductor first, then
/// larger coefficients first (so `1` precedes `-1`).
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `c0 + c1*z(n)^1 + …` with zero terms omitted; rationals print bare.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_rational(&self.coeffs[0]));
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if k == 0 {
                    fmt_rational(c)
                } else {
                    format!("{}*z({})^{}", fmt_rational(c), self.conductor, k)
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::input(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut acc = Cyclotomic::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::input(format!("empty term in `{s}`")));
            }
            match term.split_once("*z(") {
                None => acc += &Cyclotomic::from_rational(parse_rational(term)?),
                Some((coef, rest)) => {
                    let bad = || Error::input(format!("bad term `{term}`"));
                    let (n, k) = rest.split_once(")^").ok_or_else(bad)?;
                    let n: u64 = n.trim().parse().map_err(|_| bad())?;
                    let k: i64 = k.trim().parse().map_err(|_| bad())?;
                    let c = parse_rational(coef)?;
                    acc += &Cyclotomic::root_of_unity(n, k)?.scale(&c);
                }
            }
        }
        Ok(acc)
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

use crate::error::{Error, Result};
use crate::numtheory::{gcd, lcm, p_prime_part};

use super::Cyclotomic;

/// `σ_k : ζ_n ↦ ζ_n^k` on `Q(ζ_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisAutomorphism {
    conductor: u64,
    exponent: u64,
}

impl GaloisAutomorphism {
    pub fn new(conductor: u64, exponent: i64) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::input("conductor 0"));
        }
        let k = exponent.rem_euclid(conductor as i64) as u64;
        if gcd(k, conductor) != 1 && conductor > 1 {
            return Err(Error::input(format!("{exponent} is not invertible modulo {conductor}")));
        }
        Ok(GaloisAutomorphism {
            conductor,
            exponent: if conductor == 1 { 0 } else { k },
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Applies the automorphism to an element of `Q(ζ_n)`.
    pub fn apply(&self, x: &Cyclotomic) -> Result<Cyclotomic> {
        if !self.conductor.is_multiple_of(x.conductor()) {
            return Err(Error::input(format!(
                "value of conductor {} is not in Q({}) ",
                x.conductor(),
                self.conductor
            )));
        }
        Ok(x.galois_unchecked(self.exponent as i64))
    }

    /// `self ∘ other`, i.e. `σ_a σ_b = σ_{ab}`.
    pub fn compose(&self, other: &GaloisAutomorphism) -> Result<GaloisAutomorphism> {
        if self.conductor != other.conductor {
            return Err(Error::input("composing automorphisms of different fields"));
        }
        let k = (self.exponent as u128 * other.exponent as u128 % self.conductor as u128) as i64;
        GaloisAutomorphism::new(self.conductor, k)
    }
}

/// True iff every value is fixed by all `σ_k` of the common conductor `m`
/// with `k ≡ 1 (mod m_{p'})`, i.e. all values lie in `Q(ζ_{m_{p'}})`.
pub fn is_p_rational(values: &[Cyclotomic], p: u64) -> bool {
    let m = values.iter().fold(1u64, |acc, v| lcm(acc, v.conductor()));
    let mp = p_prime_part(m, p);
    (1..=m).filter(|&k| gcd(k, m) == 1 && k % mp == 1 % mp).all(|k| {
        let sigma = GaloisAutomorphism::new(m, k as i64).expect("unit by construction");
        values
            .iter()
            .all(|v| sigma.apply(v).expect("conductor divides m") == *v)
    })
}

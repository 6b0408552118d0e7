use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

use super::field::Field;
use super::rational::Rationals;
use crate::error::{Error, Result};

/// The prime field F_p, p ≥ 5 and below 2³².
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 5 {
            return Err(Error::Scalar(format!("prime field needs p >= 5 (characteristic 2 and 3 excluded), got {p}")));
        }
        if p >= 1 << 32 {
            return Err(Error::Scalar(format!("prime {p} is too large (limit 2^32)")));
        }
        if !is_prime(p) {
            return Err(Error::Scalar(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        r.to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, (self.p - 2) as u32))
        }
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn mul_add(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.p;
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn is_square(&self, a: &u64) -> Option<bool> {
        if *a == 0 {
            return Some(true);
        }
        Some(self.pow(a, ((self.p - 1) / 2) as u32) == 1)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R, _height: u32) -> u64 {
        rng.random_range(0..self.p)
    }

    /// Accepts integers and fractions "a/b", reduced mod p.
    fn parse(&self, s: &str) -> Result<u64> {
        let q = Rationals.parse(s)?;
        let n = self.reduce_big(q.numer());
        let d = self.reduce_big(q.denom());
        let di = self
            .inv(&d)
            .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {}", self.p)))?;
        Ok(self.mul(&n, &di))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::field::Field;
use crate::error::{Error, Result};

/// The field ℚ with arbitrary-precision normalized fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Whether `r` is a sum of two rational squares, i.e. a norm from `ℚ(i)`:
/// `r ≥ 0` and every prime `≡ 3 mod 4` divides `num·den` to an even power.
/// `None` when `num·den` does not fit in 64 bits.
pub fn is_sum_of_two_squares(r: &Rational) -> Option<bool> {
    if r.is_negative() {
        return Some(false);
    }
    let m = u64::try_from(r.numer() * r.denom()).ok()?;
    if m == 0 {
        return Some(true);
    }
    let mut m = m;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if p % 4 == 3 && e % 2 == 1 {
            return Some(false);
        }
        p += 1;
    }
    Some(m % 4 != 3)
}

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }

    fn add_assign(&self, acc: &mut Rational, b: &Rational) {
        *acc += b;
    }

    fn sub_assign(&self, acc: &mut Rational, b: &Rational) {
        *acc -= b;
    }

    fn mul_add(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        *acc += a * b;
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn is_square(&self, a: &Rational) -> Option<bool> {
        Some(is_square_int(a.numer()) && is_square_int(a.denom()))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R, height: u32) -> Rational {
        let h = height.max(1) as i64;
        let num = rng.random_range(-h..=h);
        let den = rng.random_range(1..=h);
        rat(num, den)
    }

    fn parse(&self, s: &str) -> Result<Rational> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Ok(BigRational::new(n, d))
        } else {
            let n = BigInt::from_str(t).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))?;
            Ok(Rational::from_integer(n))
        }
    }

    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        "Q".to_string()
    }
}

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};

/// A field handle. Elements are plain values; every operation goes through
/// the handle so that runtime parameters (a prime, a quadratic parameter)
/// live in one place.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero (or a zero divisor in a split ring).
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// `Some(true/false)` when squareness is decidable, `None` otherwise.
    fn is_square(&self, a: &Self::Elem) -> Option<bool>;
    /// Random element; over ℚ numerators and denominators are bounded by `height`.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, height: u32) -> Self::Elem;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_ratio(&self, num: i64, den: i64) -> Result<Self::Elem> {
        let d = self
            .inv(&self.from_i64(den))
            .ok_or_else(|| Error::Scalar(format!("denominator {den} is not invertible in {}", self.name())))?;
        Ok(self.mul(&self.from_i64(num), &d))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    fn sub_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, b);
    }

    /// `acc += a * b`
    fn mul_add(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut n: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    fn half(&self) -> Self::Elem {
        self.inv(&self.from_i64(2)).expect("characteristic 2 is not supported")
    }

    // Vector helpers. Vectors are coordinate slices over this field.

    fn zeros(&self, n: usize) -> Vec<Self::Elem> {
        vec![self.zero(); n]
    }

    fn unit_vector(&self, n: usize, i: usize) -> Vec<Self::Elem> {
        let mut v = self.zeros(n);
        v[i] = self.one();
        v
    }

    fn vadd(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    fn vsub(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    fn vneg(&self, a: &[Self::Elem]) -> Vec<Self::Elem> {
        a.iter().map(|x| self.neg(x)).collect()
    }

    fn vscale(&self, c: &Self::Elem, a: &[Self::Elem]) -> Vec<Self::Elem> {
        a.iter().map(|x| self.mul(c, x)).collect()
    }

    /// `acc += c * a`
    fn vaxpy(&self, acc: &mut [Self::Elem], c: &Self::Elem, a: &[Self::Elem]) {
        if self.is_zero(c) {
            return;
        }
        for (t, x) in acc.iter_mut().zip(a) {
            if !self.is_zero(x) {
                self.mul_add(t, c, x);
            }
        }
    }

    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        let mut acc = self.zero();
        for (x, y) in a.iter().zip(b) {
            if !self.is_zero(x) && !self.is_zero(y) {
                self.mul_add(&mut acc, x, y);
            }
        }
        acc
    }

    fn vis_zero(&self, a: &[Self::Elem]) -> bool {
        a.iter().all(|x| self.is_zero(x))
    }

    fn random_vector<R: Rng + ?Sized>(&self, rng: &mut R, n: usize, height: u32) -> Vec<Self::Elem> {
        (0..n).map(|_| self.random(rng, height)).collect()
    }

    fn format_vector(&self, a: &[Self::Elem]) -> String {
        let parts: Vec<String> = a.iter().map(|x| self.format(x)).collect();
        format!("[{}]", parts.join(", "))
    }

    fn parse_vector(&self, s: &str) -> Result<Vec<Self::Elem>> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.trim().is_empty() {
            return Ok(Vec::new());
        }
        trimmed.split(',').map(|t| self.parse(t.trim())).collect()
    }
}

/// Fields carrying a quadratic extension structure over a base field.
pub trait Conjugation: Field {
    type Base: Field;
    fn base(&self) -> &Self::Base;
    fn conj(&self, a: &Self::Elem) -> Self::Elem;
    fn norm(&self, a: &Self::Elem) -> <Self::Base as Field>::Elem;
    fn trace(&self, a: &Self::Elem) -> <Self::Base as Field>::Elem;
    fn embed(&self, a: &<Self::Base as Field>::Elem) -> Self::Elem;
}

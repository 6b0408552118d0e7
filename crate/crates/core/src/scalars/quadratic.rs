use rand::Rng;

use super::field::{Conjugation, Field};
use crate::error::{Error, Result};

/// Element `a + b·γ` of a quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<E> {
    pub a: E,
    pub b: E,
}

/// The extension `F(γ)` with `γ² = d`, Galois conjugation `γ ↦ −γ`.
///
/// Built with [`QuadExt::new`] it is a field; [`QuadExt::new_unchecked`] allows a
/// square `d`, giving the split ring `F × F` (used for splitting towers, where
/// only ring operations are needed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt<F: Field> {
    base: F,
    d: F::Elem,
}

impl<F: Field> QuadExt<F> {
    pub fn new(base: F, d: F::Elem) -> Result<Self> {
        if base.is_zero(&d) {
            return Err(Error::Scalar("quadratic extension parameter d must be nonzero".into()));
        }
        if base.is_square(&d) == Some(true) {
            return Err(Error::Scalar(format!(
                "quadratic extension parameter d = {} is a square in {}; the extension is degenerate",
                base.format(&d),
                base.name()
            )));
        }
        Ok(QuadExt { base, d })
    }

    pub fn new_unchecked(base: F, d: F::Elem) -> Self {
        QuadExt { base, d }
    }

    pub fn d(&self) -> &F::Elem {
        &self.d
    }

    pub fn gamma(&self) -> Quad<F::Elem> {
        Quad { a: self.base.zero(), b: self.base.one() }
    }

    pub fn make(&self, a: F::Elem, b: F::Elem) -> Quad<F::Elem> {
        Quad { a, b }
    }
}

impl<F: Field> Field for QuadExt<F> {
    type Elem = Quad<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Quad { a: self.base.zero(), b: self.base.zero() }
    }

    fn one(&self) -> Self::Elem {
        Quad { a: self.base.one(), b: self.base.zero() }
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        Quad { a: self.base.from_i64(v), b: self.base.zero() }
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        Quad { a: self.base.add(&x.a, &y.a), b: self.base.add(&x.b, &y.b) }
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        Quad { a: self.base.sub(&x.a, &y.a), b: self.base.sub(&x.b, &y.b) }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        let bb = f.mul(&x.b, &y.b);
        let mut a = f.mul(&x.a, &y.a);
        f.mul_add(&mut a, &self.d, &bb);
        let mut b = f.mul(&x.a, &y.b);
        f.mul_add(&mut b, &x.b, &y.a);
        Quad { a, b }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        Quad { a: self.base.neg(&x.a), b: self.base.neg(&x.b) }
    }

    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let n = self.norm(x);
        let ni = self.base.inv(&n)?;
        Some(Quad { a: self.base.mul(&x.a, &ni), b: self.base.neg(&self.base.mul(&x.b, &ni)) })
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.base.is_zero(&x.a) && self.base.is_zero(&x.b)
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn is_square(&self, _a: &Self::Elem) -> Option<bool> {
        None
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R, height: u32) -> Self::Elem {
        Quad { a: self.base.random(rng, height), b: self.base.random(rng, height) }
    }

    /// Parses `"[a, b]"` or a bare base-field scalar.
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        if t.starts_with('[') {
            let parts = split_top_level(&t[1..t.len().saturating_sub(1)]);
            if parts.len() != 2 || !t.ends_with(']') {
                return Err(Error::Parse(format!("expected [a, b] for an extension element, got {t:?}")));
            }
            Ok(Quad { a: self.base.parse(parts[0])?, b: self.base.parse(parts[1])? })
        } else {
            Ok(Quad { a: self.base.parse(t)?, b: self.base.zero() })
        }
    }

    fn format(&self, x: &Self::Elem) -> String {
        format!("[{}, {}]", self.base.format(&x.a), self.base.format(&x.b))
    }

    fn name(&self) -> String {
        format!("{}(sqrt({}))", self.base.name(), self.base.format(&self.d))
    }
}

impl<F: Field> Conjugation for QuadExt<F> {
    type Base = F;

    fn base(&self) -> &F {
        &self.base
    }

    fn conj(&self, x: &Self::Elem) -> Self::Elem {
        Quad { a: x.a.clone(), b: self.base.neg(&x.b) }
    }

    /// `N(a + bγ) = a² − d·b²`
    fn norm(&self, x: &Self::Elem) -> F::Elem {
        let f = &self.base;
        let bb = f.mul(&x.b, &x.b);
        f.sub(&f.mul(&x.a, &x.a), &f.mul(&self.d, &bb))
    }

    fn trace(&self, x: &Self::Elem) -> F::Elem {
        self.base.add(&x.a, &x.a)
    }

    fn embed(&self, a: &F::Elem) -> Self::Elem {
        Quad { a: a.clone(), b: self.base.zero() }
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, PrimeField, Rationals};

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(QuadExt::new(Rationals, rat(0, 1)).is_err());
        assert!(QuadExt::new(Rationals, rat(4, 9)).is_err());
        let f = PrimeField::new(101).unwrap();
        assert!(QuadExt::new(f, f.from_i64(-1)).is_err());
        assert!(QuadExt::new(f, 2).is_ok());
    }

    #[test]
    fn gaussian_rationals() {
        let e = QuadExt::new(Rationals, rat(-1, 1)).unwrap();
        let one = e.one();
        assert_eq!(e.norm(&one), rat(1, 1));
        let g = e.gamma();
        assert_eq!(e.conj(&g), e.neg(&g));
        assert_eq!(e.norm(&g), rat(1, 1));
    }

    #[test]
    fn norm_mod_101() {
        let f = PrimeField::new(101).unwrap();
        let e = QuadExt::new(f, 2).unwrap();
        // 9 - 2·25 = -41 ≡ 60
        assert_eq!(e.norm(&e.make(3, 5)), 60);
        assert_eq!(9i64 - 2 * 25, -41);
    }

    #[test]
    fn nested_parse_and_format() {
        let e = QuadExt::new(Rationals, rat(-1, 1)).unwrap();
        let t = QuadExt::new_unchecked(e.clone(), e.make(rat(2, 1), rat(0, 1)));
        let x = t.parse("[[1, 1/2], [0, -3]]").unwrap();
        assert_eq!(t.format(&x), "[[1, 1/2], [0, -3]]");
        assert_eq!(e.parse("5").unwrap(), e.from_i64(5));
        assert!(e.parse("[1, 2, 3]").is_err());
    }
}

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn field_axioms<F: Field>(f: &F, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let x = f.random(&mut rng, 9);
        let y = f.random(&mut rng, 9);
        let z = f.random(&mut rng, 9);
        assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
        assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
        assert!(f.is_zero(&f.add(&x, &f.neg(&x))));
        if let Some(xi) = f.inv(&x) {
            assert!(f.is_one(&f.mul(&x, &xi)));
        } else {
            assert!(f.is_zero(&x));
        }
    }
}

fn conjugation_laws<F: Field>(e: &QuadExt<F>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let x = e.random(&mut rng, 9);
        let y = e.random(&mut rng, 9);
        let xy = e.mul(&x, &y);
        assert_eq!(e.conj(&xy), e.mul(&e.conj(&x), &e.conj(&y)));
        assert_eq!(e.conj(&e.conj(&x)), x);
        assert_eq!(e.norm(&xy), e.base().mul(&e.norm(&x), &e.norm(&y)));
        assert_eq!(e.embed(&e.norm(&x)), e.mul(&x, &e.conj(&x)));
        assert_eq!(e.embed(&e.trace(&x)), e.add(&x, &e.conj(&x)));
    }
}

#[test]
fn rationals_are_a_field() {
    field_axioms(&Rationals, 1);
}

#[test]
fn prime_field_is_a_field() {
    field_axioms(&PrimeField::new(101).unwrap(), 2);
    field_axioms(&PrimeField::new(7).unwrap(), 3);
}

#[test]
fn quadratic_extensions_are_fields() {
    let e = QuadExt::new(Rationals, rat(-1, 1)).unwrap();
    field_axioms(&e, 4);
    conjugation_laws(&e, 5);
    let f = PrimeField::new(101).unwrap();
    let e = QuadExt::new(f, 2).unwrap();
    field_axioms(&e, 6);
    conjugation_laws(&e, 7);
}

#[test]
fn tower_ring_operations() {
    let e = QuadExt::new(Rationals, rat(-2, 1)).unwrap();
    let t: Tower<Rationals> = QuadExt::new_unchecked(e.clone(), e.from_i64(-3));
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let x = t.random(&mut rng, 5);
        let y = t.random(&mut rng, 5);
        let z = t.random(&mut rng, 5);
        assert_eq!(t.mul(&t.mul(&x, &y), &z), t.mul(&x, &t.mul(&y, &z)));
        assert_eq!(t.mul(&x, &t.add(&y, &z)), t.add(&t.mul(&x, &y), &t.mul(&x, &z)));
    }
    let beta = t.gamma();
    assert_eq!(t.mul(&beta, &beta), t.from_i64(-3));
}

proptest! {
    #[test]
    fn rational_normal_form(n in -1000i64..1000, d in 1i64..1000, k in 1i64..50) {
        let q = Rationals;
        let a = rat(n * k, d * k);
        prop_assert_eq!(a.clone(), rat(n, d));
        let s = q.format(&a);
        prop_assert_eq!(q.parse(&s).unwrap(), a.clone());
        prop_assert!(a.denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn prime_field_parse_matches_rational_map(n in -500i64..500, d in 1i64..100) {
        let f = PrimeField::new(101).unwrap();
        prop_assume!(d % 101 != 0);
        let x = f.parse(&format!("{n}/{d}")).unwrap();
        prop_assert_eq!(f.mul(&x, &f.from_i64(d)), f.from_i64(n));
    }
}

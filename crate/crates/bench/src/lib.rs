//! Shared fixtures for the benchmarks.

use quadstruct::clifford::EKind;
use quadstruct::scalars::{rat, Rational};
use quadstruct::zoo::{e_type_algebra, ETypeAlgebra};
use quadstruct::{Field, PrimeField, Rationals};

pub fn demo_s() -> [Rational; 5] {
    [rat(2, 1), rat(3, 1), rat(1, 2), rat(5, 1), rat(-1, 15)]
}

pub fn e8_rational() -> ETypeAlgebra<Rationals> {
    e_type_algebra(Rationals, EKind::E8, rat(-1, 1), &demo_s()).expect("demo parameters are valid")
}

pub fn e8_prime() -> ETypeAlgebra<PrimeField> {
    let f = PrimeField::new(101).expect("101 is prime");
    let s: Vec<_> = demo_s().iter().map(|c| f.parse(&Rationals.format(c)).expect("invertible mod 101")).collect();
    e_type_algebra(f, EKind::E8, f.from_i64(2), &s).expect("demo parameters are valid")
}

pub fn e6_prime(p: u64) -> ETypeAlgebra<PrimeField> {
    let f = PrimeField::new(p).expect("prime modulus");
    e_type_algebra(f, EKind::E6, f.from_i64(2), &[f.from_i64(3), f.from_i64(5)]).expect("valid parameters")
}

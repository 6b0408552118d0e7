use proptest::prelude::*;

use super::*;
use crate::algebra::{check_structurable, StructurableMode};
use crate::clifford::EKind;
use crate::fts::{check_fts_axioms, quartic};
use crate::report::CheckReport;
use crate::scalars::{rat, Field, PrimeField, Rational, Rationals};
use crate::zoo::e_type_algebra;

fn q_ext() -> Quadrangular<Rationals> {
    let f = Rationals;
    let pair = QuadraticPair::extension(f, rat(-1, 1)).unwrap();
    let g = vec![rat(0, 1), rat(1, 1)];
    pseudo_quadratic_quadrangular(pair, vec![g.clone(), g]).unwrap()
}

fn q_quat() -> Quadrangular<Rationals> {
    let f = Rationals;
    let pair = QuadraticPair::quaternion(f, rat(-1, 1), rat(-1, 1)).unwrap();
    pseudo_quadratic_quadrangular(pair, vec![vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]]).unwrap()
}

/// `F₁₀₁(√2)` with three coefficients `γ, 3γ, −5γ`.
fn fp_rank3() -> Quadrangular<PrimeField> {
    let f = PrimeField::new(101).unwrap();
    let pair = QuadraticPair::extension(f, f.from_i64(2)).unwrap();
    let c = |t: i64| vec![f.zero(), f.from_i64(t)];
    pseudo_quadratic_quadrangular(pair, vec![c(1), c(3), c(-5)]).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| rat(c, 1)).collect()
}

fn assert_all(reports: &[CheckReport]) {
    for r in reports {
        assert!(r.passed(), "{} failed: {:?}", r.name, r.counterexample);
        assert!(r.cases > 0, "{} ran no cases", r.name);
    }
}

#[test]
fn construction_errors() {
    let f = Rationals;
    assert!(QuadraticPair::extension(f, rat(4, 9)).is_err());
    assert!(QuadraticPair::extension(f, rat(0, 1)).is_err());
    let pair = QuadraticPair::extension(f, rat(-1, 1)).unwrap();
    assert!(pseudo_quadratic_quadrangular(pair.clone(), vec![]).is_err());
    assert!(pseudo_quadratic_quadrangular(pair.clone(), vec![ints(&[1, 1])]).is_err());
    assert!(pseudo_quadratic_quadrangular(pair.clone(), vec![ints(&[0, 0])]).is_err());
    assert!(pseudo_quadratic_quadrangular(pair, vec![ints(&[0, 1, 0])]).is_err());
}

#[test]
fn axioms_and_identities_hold() {
    for o in [q_ext(), q_quat()] {
        assert_all(&check_axioms(&o, 60, 3, 3));
        assert_all(&check_identities(&o, 60, 4, 3));
    }
    assert_all(&check_identities(&fp_rank3(), 60, 5, 0));
}

#[test]
fn anisotropy_note_over_q_and_failure_over_fp() {
    let reports = check_axioms(&q_ext(), 30, 1, 3);
    let d2 = reports.iter().find(|r| r.name == "pq_D2").unwrap();
    assert_eq!(d2.note.as_deref(), Some("anisotropy: not falsified (30 samples)"));
    let reports = check_axioms(&fp_rank3(), 200, 1, 0);
    let d2 = reports.iter().find(|r| r.name == "pq_D2").unwrap();
    assert!(!d2.passed());
    assert!(reports.iter().filter(|r| r.name != "pq_D2").all(|r| r.passed()));
}

#[test]
fn transposed_h_breaks_b2() {
    let bad = q_ext().transposed();
    let reports = check_axioms(&bad, 10, 1, 2);
    let b2 = reports.iter().find(|r| r.name == "pq_B2").unwrap();
    assert!(!b2.passed());
    assert!(b2.counterexample.is_some());
}

#[test]
fn frozen_values() {
    // x = (1, γ) in ℚ(i)²: h(x,x) = γ + (−γ)γγ = 2γ, so π(x) = γ and q(π(x)) = 1.
    let o = q_ext();
    let x = ints(&[1, 0, 0, 1]);
    assert_eq!(o.h(&x, &x), ints(&[0, 2]));
    assert_eq!(o.pi(&x), ints(&[0, 1]));
    let t = fts_from_quadrangular(&o);
    assert_eq!(quartic(&t, &x), rat(-12, 1));
    assert_eq!(t.triple(&x, &x, &x), o.act(&x, &ints(&[0, 6])));
    // Quaternions: π(1) = ½h(1,1) = i/2 and q(i/2) = 1/4.
    let o = q_quat();
    let one = ints(&[1, 0, 0, 0]);
    assert_eq!(o.pi(&one), vec![rat(0, 1), rat(1, 2), rat(0, 1), rat(0, 1)]);
    assert_eq!(quartic(&fts_from_quadrangular(&o), &one), rat(-3, 1));
}

#[test]
fn quadrangular_triple_system_is_fts() {
    for o in [q_ext(), q_quat()] {
        let t = fts_from_quadrangular(&o);
        assert_all(&check_fts_axioms(&t, 20, 7, 2));
        assert_all(&check_fts_bridge(&o, 40, 8, 3));
    }
    let o = fp_rank3();
    assert_all(&check_fts_axioms(&fts_from_quadrangular(&o), 20, 7, 0));
}

#[test]
fn module_compatibility() {
    for o in [q_ext(), q_quat()] {
        assert_all(&check_module_compat(&o, 25, 9, 2).unwrap());
    }
    assert_all(&check_module_compat(&fp_rank3(), 25, 9, 0).unwrap());
}

#[test]
fn etype_module_compatibility() {
    let f = PrimeField::new(101).unwrap();
    let s: Vec<_> = [2, 3, 51].iter().map(|&v| f.from_i64(v)).collect();
    let x = e_type_algebra(f, EKind::E7, f.from_i64(2), &s).unwrap();
    assert_all(&check_etype_module_compat(&x, 6, 1, 0).unwrap());
}

#[test]
fn decomposition_invariants() {
    let o = q_ext();
    let d = pq_decompose(&o).unwrap();
    assert_eq!(d.xi(), &ints(&[1, 0, 0, 0])[..]);
    assert_eq!(d.e(), &ints(&[0, 1])[..]);
    assert_eq!(d.e_inv(), &ints(&[0, -1])[..]);
    assert_eq!(d.perp().len(), 2);
    assert!(d.check().passed());
    let x = ints(&[3, -1, 2, 5]);
    assert_eq!(d.to_x(&d.to_alg(&x)), x);
    let q = pq_decompose(&q_quat()).unwrap();
    assert!(q.perp().is_empty());
    assert!(q.check().passed());
    assert!(pq_decompose(&fp_rank3()).unwrap().check().passed());
    let other = pq_decompose_at(&o, &ints(&[0, 0, 1, 1])).unwrap();
    assert_eq!(other.e(), &ints(&[0, 2])[..]);
    assert!(other.check().passed());
    assert!(pq_decompose_at(&o, &ints(&[0, 0, 0, 0])).is_err());
    assert!(pq_decompose_at(&o, &ints(&[1, 0])).is_err());
}

#[test]
fn pi_of_first_basis_vector() {
    let o = q_ext();
    assert_eq!(o.pi(&ints(&[1, 0, 0, 0])), vec![rat(0, 1), rat(1, 2)]);
}

#[test]
fn structurable_unit_solves_unit_equations() {
    // Solve u·b = b = b·u for all basis b as one linear system in u.
    let o = q_ext();
    let ps = pq_decompose(&o).unwrap().structurable(&rat(1, 1)).unwrap();
    let a = ps.algebra();
    let n = a.dim();
    let f = Rationals;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for b in 0..n {
        let left = |u: usize| a.mul(&a.basis(u), &a.basis(b));
        let right = |u: usize| a.mul(&a.basis(b), &a.basis(u));
        for c in 0..n {
            rows.push((0..n).map(|u| left(u)[c].clone()).collect::<Vec<_>>());
            rhs.push(if b == c { f.one() } else { f.zero() });
            rows.push((0..n).map(|u| right(u)[c].clone()).collect::<Vec<_>>());
            rhs.push(if b == c { f.one() } else { f.zero() });
        }
    }
    let u = crate::scalars::Matrix::from_rows(rows).solve(&f, &rhs).unwrap();
    assert_eq!(u, a.unit().to_vec());
    assert_eq!(u, ints(&[1, 0, 0, 0]));
}

#[test]
fn structurable_matches_closed_product() {
    closed_product_case(&q_ext());
    closed_product_case(&q_quat());
    closed_product_case(&fp_rank3());
}

fn closed_product_case<F: Field>(o: &Quadrangular<F>) {
    let d = pq_decompose(o).unwrap();
    let ps = d.structurable(&o.field().one()).unwrap();
    let a = ps.algebra();
    let n = a.dim();
    for i in 0..n {
        assert_eq!(a.conj(&a.basis(i)), d.conj_closed(&a.basis(i)));
        for j in 0..n {
            assert_eq!(a.mul(&a.basis(i), &a.basis(j)), d.product_closed(&a.basis(i), &a.basis(j)), "({i},{j})");
        }
    }
    let r = check_structurable(a, StructurableMode::Exhaustive);
    assert!(r.passed(), "{:?}", r.counterexample);
    assert_eq!(ps.context().s0(), &{
        let mut s0 = d.e().to_vec();
        s0.extend(o.field().zeros(n - o.dim_l()));
        s0
    }[..]);
}

#[test]
fn cubic_formula() {
    for o in [q_ext(), q_quat()] {
        let ps = pq_decompose(&o).unwrap().structurable(&rat(1, 1)).unwrap();
        let r = ps.check_cubic_formula(20, 2, 3);
        assert!(r.passed(), "{:?}", r.counterexample);
    }
}

#[test]
fn similarity_multiplier_depends_on_s0_scale() {
    for o in [q_ext(), q_quat()] {
        let (lambda, reports) = verify_pq_similarity(&o, &rat(1, 2), 20, 3, 3).unwrap();
        assert_eq!(lambda, rat(1, 1));
        assert_all(&reports);
        let (lambda, reports) = verify_pq_similarity(&o, &rat(1, 1), 20, 3, 3).unwrap();
        assert_eq!(lambda, rat(2, 1));
        assert_all(&reports);
    }
}

#[test]
fn isotope_multiplier() {
    let o = q_ext();
    let (lambda, _) = isotope_multiplier_check(&o, &ints(&[1, 0]), 5, 1, 2).unwrap();
    assert_eq!(lambda, rat(1, 1));
    // q(γ) = −γ² = 1 for γ² = −1.
    let (lambda, reports) = isotope_multiplier_check(&o, &ints(&[0, 1]), 15, 1, 2).unwrap();
    assert_eq!(lambda, rat(1, 1));
    assert_all(&reports);
    let (lambda, reports) = isotope_multiplier_check(&o, &ints(&[1, 2]), 15, 1, 2).unwrap();
    assert_eq!(lambda, rat(1, 5));
    assert_all(&reports);
    let (lambda, reports) = isotope_multiplier_check(&q_quat(), &ints(&[1, 1, 1, 0]), 15, 1, 2).unwrap();
    assert_eq!(lambda, rat(1, 3));
    assert_all(&reports);
    assert!(isotope_multiplier_check(&o, &ints(&[0, 0]), 5, 1, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn h_is_skew_hermitian(a in proptest::collection::vec(-9i64..9, 4), b in proptest::collection::vec(-9i64..9, 4)) {
        let o = q_quat();
        let (a, b) = (ints(&a), ints(&b));
        prop_assert_eq!(o.h(&a, &b), Rationals.vneg(&o.sigma(&o.h(&b, &a))));
    }

    #[test]
    fn cube_is_six_x_pi(a in proptest::collection::vec(-9i64..9, 4)) {
        let o = q_ext();
        let x = ints(&a);
        let t = fts_from_quadrangular(&o);
        prop_assert_eq!(t.triple(&x, &x, &x), Rationals.vscale(&rat(6, 1), &o.act(&x, &o.pi(&x))));
    }
}

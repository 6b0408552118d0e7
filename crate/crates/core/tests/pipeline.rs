use quadstruct::algebra::{check_structurable, StructurableMode};
use quadstruct::clifford::{matched_biquaternion, EKind};
use quadstruct::fts::{check_fts_axioms, fts_from_skew_dim_one};
use quadstruct::quadrangular::{check_axioms, check_fts_bridge, pq_decompose, pseudo_quadratic_quadrangular, QuadraticPair};
use quadstruct::scalars::rat;
use quadstruct::zoo::e_type_algebra;
use quadstruct::{Field, PrimeField, Rationals};

#[test]
fn e6_over_a_prime_field_end_to_end() {
    let f = PrimeField::new(11).unwrap();
    let x = e_type_algebra(f, EKind::E6, f.from_i64(2), &[f.from_i64(3), f.from_i64(5)]).unwrap();
    let r = check_structurable(x.algebra(), StructurableMode::Exhaustive);
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.cases, 8u64.pow(4));
    let t = fts_from_skew_dim_one(x.context());
    assert!(check_fts_axioms(&t, 50, 1, 5).iter().all(|r| r.passed()));
}

#[test]
fn e8_norm_matches_reduced_norm_at_the_unit() {
    let s = [rat(2, 1), rat(3, 1), rat(1, 2), rat(5, 1), rat(-1, 15)];
    let x = e_type_algebra(Rationals, EKind::E8, rat(-1, 1), &s).unwrap();
    let bq = matched_biquaternion(x.clifford()).unwrap();
    let mut one = Rationals.zeros(16);
    one[0] = rat(1, 1);
    let nu = x.context().conjugate_norm(&x.psi_embed(&one).unwrap());
    assert_eq!(nu, bq.nrd(&one).unwrap());
    assert_eq!(nu, rat(1, 1));
}

#[test]
fn pseudo_quadratic_space_yields_structurable_algebra() {
    let pair = QuadraticPair::extension(Rationals, rat(-2, 1)).unwrap();
    let g = vec![rat(0, 1), rat(1, 1)];
    let o = pseudo_quadratic_quadrangular(pair, vec![g.clone(), g]).unwrap();
    assert!(check_axioms(&o, 60, 3, 5).iter().all(|r| r.passed()));
    assert!(check_fts_bridge(&o, 40, 3, 5).iter().all(|r| r.passed()));
    let d = pq_decompose(&o).unwrap();
    assert!(d.check().passed());
    let s = d.structurable(&rat(1, 1)).unwrap();
    let r = check_structurable(s.algebra(), StructurableMode::Sampled { samples: 40, seed: 3, height: 5 });
    assert!(r.passed(), "{r:?}");
}

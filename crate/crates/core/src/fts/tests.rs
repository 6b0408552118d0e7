use std::sync::Arc;

use super::*;
use crate::algebra::InvolutiveAlgebra;
use crate::scalars::{rat, PrimeField, QuadExt, Rationals};

/// 2×2 matrices with the transpose involution; the skew part is spanned by
/// `[[0,1],[−1,0]]`, which squares to `−1`.
fn transpose_matrices<F: Field>(f: &F) -> InvolutiveAlgebra<F> {
    // basis E11, E12, E21, E22 indexed 2r + c
    let g = f.clone();
    let prod = move |a: usize, b: usize| {
        let (r1, c1, r2, c2) = (a / 2, a % 2, b / 2, b % 2);
        let mut v = g.zeros(4);
        if c1 == r2 {
            v[2 * r1 + c2] = g.one();
        }
        v
    };
    let h = f.clone();
    let conj = move |a: usize| h.unit_vector(4, 2 * (a % 2) + a / 2);
    let mut unit = f.zeros(4);
    unit[0] = f.one();
    unit[3] = f.one();
    let names = ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect();
    InvolutiveAlgebra::from_fn(f.clone(), 4, prod, conj, unit, names).unwrap()
}

fn matrix_fts<F: Field>(f: &F) -> TripleSystem<F> {
    let ctx = SkewDimOneContext::new(Arc::new(transpose_matrices(f))).unwrap();
    fts_from_skew_dim_one(&ctx)
}

#[test]
fn matrix_instance_axioms() {
    let f = Rationals;
    let t = matrix_fts(&f);
    assert_eq!(t.dim(), 4);
    assert!(is_simple(&t));
    for r in check_fts_axioms(&t, 50, 1, 5) {
        assert!(r.passed(), "{r:?}");
    }
    assert_eq!(quartic(&t, &f.zeros(4)), f.zero());
}

#[test]
fn form_is_skew_and_matches_definition() {
    let f = Rationals;
    let ctx = SkewDimOneContext::new(Arc::new(transpose_matrices(&f))).unwrap();
    let t = fts_from_skew_dim_one(&ctx);
    let a = ctx.algebra();
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = (a.basis(i), a.basis(j));
            let v = ctx.bform_vector(&x, &y);
            assert_eq!(v, f.vscale(&t.bform(&x, &y), a.unit()));
        }
    }
}

#[test]
fn rescaling_s0_scales_form_and_product() {
    let f = Rationals;
    let ctx = SkewDimOneContext::new(Arc::new(transpose_matrices(&f))).unwrap();
    let two = rat(2, 1);
    let t1 = fts_from_skew_dim_one(&ctx);
    let t2 = fts_from_skew_dim_one(&ctx.rescaled(&two).unwrap());
    let id = Matrix::identity(&f, 4);
    for r in verify_similarity(&t1, &t2, &id, &two, 30, 2, 5).unwrap() {
        assert!(r.passed(), "{r:?}");
    }
    assert_eq!(detect_multiplier(&t1, &t2, &id), Some(two));
}

#[test]
fn scaled_triple_multiplier_detected() {
    let f = PrimeField::new(101).unwrap();
    let t = matrix_fts(&f);
    let c = f.from_i64(7);
    let scaled = t.with_scaled_triple(c);
    assert_eq!(detect_multiplier(&t, &scaled, &Matrix::identity(&f, 4)), Some(c));
    assert_eq!(detect_multiplier(&t, &t, &Matrix::identity(&f, 4)), Some(f.one()));
}

#[test]
fn identity_similarity_passes() {
    let f = Rationals;
    let t = matrix_fts(&f);
    for r in verify_similarity(&t, &t, &Matrix::identity(&f, 4), &f.one(), 20, 3, 5).unwrap() {
        assert!(r.passed());
    }
    assert!(verify_similarity(&t, &t, &Matrix::zero(&f, 4, 4), &f.one(), 1, 0, 1).is_err());
}

#[test]
fn zero_form_fails_nonzero_clause() {
    let f = Rationals;
    let base = matrix_fts(&f);
    let src = Arc::clone(base.source());
    let g = f;
    let zero_form = FnTriple::new(f, 4, move |x, y, z| src.triple(x, y, z), move |_, _| g.zero());
    let t = TripleSystem::new(Arc::new(zero_form));
    assert!(!is_simple(&t));
    let reports = check_fts_axioms(&t, 0, 0, 1);
    let ax = reports.iter().find(|r| r.name == "fts_axiom_i").unwrap();
    assert!(!ax.passed());
    assert_eq!(ax.counterexample.as_deref(), Some("the 4-linear form vanishes identically"));
}

#[test]
fn split_instance_has_supplementary_pair() {
    // over F_101 the quartic −12·det² hits 12k² since −1 is a square mod 101
    let f = PrimeField::new(101).unwrap();
    let t = matrix_fts(&f);
    let mut found = None;
    'search: for a in 0..4i64 {
        for b in 0..4i64 {
            for c in 0..4i64 {
                for d in 0..4i64 {
                    let x: Vec<_> = [a, b, c, d].iter().map(|&v| f.from_i64(v)).collect();
                    let q = quartic(&t, &x);
                    if f.is_zero(&q) {
                        continue;
                    }
                    let target = f.div(&q, &f.from_i64(12)).unwrap();
                    if let Some(k) = (1..101).map(|n| f.from_i64(n)).find(|k| f.square(k) == target) {
                        found = Some((x, k));
                        break 'search;
                    }
                }
            }
        }
    }
    let (x, k) = found.expect("split instance has a suitable x");
    let (u1, u2) = supplementary_pair(&t, &x, &k).unwrap();
    assert!(is_strictly_regular(&t, &u1).unwrap());
    assert!(is_strictly_regular(&t, &u2).unwrap());
    assert_eq!(t.bform(&u1, &u2), f.one());
    let wrong = f.add(&k, &f.one());
    assert!(matches!(supplementary_pair(&t, &x, &wrong), Err(crate::Error::Precondition(_))));
}

#[test]
fn strict_regularity_rejects_zero() {
    let f = Rationals;
    let t = matrix_fts(&f);
    assert!(is_strictly_regular(&t, &f.zeros(4)).is_err());
}

#[test]
fn scalar_extension_keeps_axioms() {
    let f = Rationals;
    let t = matrix_fts(&f);
    let e = QuadExt::new(f, rat(-1, 1)).unwrap();
    let te = t.scalar_extend(&e);
    assert_eq!(te.dim(), t.dim());
    for r in check_fts_axioms(&te, 20, 4, 3) {
        assert!(r.passed(), "{r:?}");
    }
    // triples of base vectors agree with the base system
    let x = vec![rat(1, 2), rat(-3, 1), rat(2, 1), rat(5, 3)];
    let ex: Vec<_> = x.iter().map(|c| e.embed(c)).collect();
    let base: Vec<_> = t.triple(&x, &x, &x).iter().map(|c| e.embed(c)).collect();
    assert_eq!(te.triple(&ex, &ex, &ex), base);
}

#[test]
fn table_and_source_agree() {
    let f = Rationals;
    let t = matrix_fts(&f);
    let x = vec![rat(1, 2), rat(-3, 1), rat(2, 1), rat(5, 3)];
    let y = vec![rat(0, 1), rat(1, 1), rat(-1, 4), rat(2, 1)];
    assert_eq!(t.triple(&x, &y, &x), t.triple_from_table(&x, &y, &x));
}

#[test]
fn cube_matches_triple() {
    let f = PrimeField::new(101).unwrap();
    let t = matrix_fts(&f);
    for s in 0..20 {
        let mut rng = crate::report::sample_rng(21, s);
        let x = f.random_vector(&mut rng, 4, 0);
        assert_eq!(t.cube(&x), t.triple(&x, &x, &x));
    }
    let x = vec![rat(1, 2), rat(-3, 1), rat(2, 1), rat(5, 3)];
    let q = matrix_fts(&Rationals);
    assert_eq!(q.cube(&x), q.triple(&x, &x, &x));
}

#[test]
fn json_dump_lists_sorted_triples() {
    let f = Rationals;
    let t = matrix_fts(&f);
    let j = t.to_json();
    assert_eq!(j.dim, 4);
    assert_eq!(j.bform.len(), 4);
    assert!(j.triples.iter().all(|(i, jj, k, _)| i <= jj && jj <= k));
    let text = serde_json::to_string(&j).unwrap();
    let back: FtsJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back, j);
}

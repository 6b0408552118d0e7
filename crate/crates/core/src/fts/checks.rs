use rayon::prelude::*;

use super::{sorted_triples, TripleSystem};
use crate::error::{Error, Result};
use crate::report::{sample_rng, CheckReport, Mode};
use crate::scalars::{Field, Matrix};

const AXIOM_I: &str = "(x,y,z,w) -> <x,yzw> is a nonzero symmetric 4-linear form";
const AXIOM_II: &str = "(xxx)xy = <y,x> xxx + <y,xxx> x";
const SIMILARITY: &str = "t'(psi x, psi y, psi z) = lambda psi(t(x,y,z))";
const SIMILARITY_FORM: &str = "b'(psi x, psi y) = lambda b(x,y) and q'(psi x) = lambda^2 q(x)";

/// `⟨x, xxx⟩`.
pub fn quartic<F: Field>(t: &TripleSystem<F>, x: &[F::Elem]) -> F::Elem {
    t.bform(x, &t.cube(x))
}

/// Nondegeneracy of the bilinear form.
pub fn is_simple<F: Field>(t: &TripleSystem<F>) -> bool {
    t.gram().rank(t.field()) == t.dim()
}

fn merge_all(name: &str, anchor: &str, mode: Mode, parts: Vec<CheckReport>) -> CheckReport {
    let mut r = CheckReport::new(name, anchor, mode);
    for p in parts {
        r.merge(p);
    }
    r
}

/// The two defining axioms together with skew-symmetry of the form and symmetry
/// of the triple product. Multilinear parts run on all basis tuples; axiom (ii)
/// runs on `samples` random pairs.
pub fn check_fts_axioms<F: Field>(t: &TripleSystem<F>, samples: usize, seed: u64, height: u32) -> Vec<CheckReport> {
    let f = t.field();
    let n = t.dim();
    let g = t.gram();

    let mut skew = CheckReport::new("fts_form_skew", "<x,y> = -<y,x>", Mode::Exhaustive);
    for i in 0..n {
        for j in i..n {
            let ok = *g.get(i, j) == f.neg(g.get(j, i));
            skew.record(ok, || format!("<e{i},e{j}> = {}, <e{j},e{i}> = {}", f.format(g.get(i, j)), f.format(g.get(j, i))));
        }
    }

    // Every ordering of a basis triple evaluated through the source must agree
    // with the sorted-triple table entry.
    let table = t.table();
    let keys = sorted_triples(n);
    let sym_parts: Vec<CheckReport> = keys
        .par_iter()
        .map(|&(i, j, k)| {
            let mut r = CheckReport::new("fts_triple_symmetric", "xyz symmetric in x, y, z", Mode::Exhaustive);
            let mut expected = f.zeros(n);
            for (m, c) in table.get(i, j, k) {
                expected[*m] = c.clone();
            }
            for (a, b, c) in [(j, i, k), (k, j, i), (i, k, j), (j, k, i), (k, i, j)] {
                let v = t.triple(&t.basis(a), &t.basis(b), &t.basis(c));
                r.record(v == expected, || format!("t(e{a},e{b},e{c}) differs from t(e{i},e{j},e{k})"));
            }
            r
        })
        .collect();
    let symmetric = merge_all("fts_triple_symmetric", "xyz symmetric in x, y, z", Mode::Exhaustive, sym_parts);

    // Axiom (i): q(i;jkl) = ⟨e_i, t(e_j,e_k,e_l)⟩ must not depend on which
    // index sits in the form slot.
    let q = |i: usize, j: usize, k: usize, l: usize| {
        let mut acc = f.zero();
        for (m, c) in table.get(j, k, l) {
            f.mul_add(&mut acc, g.get(i, *m), c);
        }
        acc
    };
    let ax1_parts: Vec<(CheckReport, bool)> = keys
        .par_iter()
        .map(|&(i, j, k)| {
            let mut r = CheckReport::new("fts_axiom_i", AXIOM_I, Mode::Exhaustive);
            let mut nonzero = false;
            for l in k..n {
                let vals = [q(i, j, k, l), q(j, i, k, l), q(k, i, j, l), q(l, i, j, k)];
                nonzero |= !f.is_zero(&vals[0]);
                let ok = vals.iter().all(|v| *v == vals[0]);
                r.record(ok, || {
                    let s: Vec<String> = vals.iter().map(|v| f.format(v)).collect();
                    format!("basis tuple ({i},{j},{k},{l}): slot values {}", s.join(", "))
                });
            }
            (r, nonzero)
        })
        .collect();
    let any_nonzero = ax1_parts.iter().any(|(_, nz)| *nz);
    let mut axiom_i = merge_all("fts_axiom_i", AXIOM_I, Mode::Exhaustive, ax1_parts.into_iter().map(|(r, _)| r).collect());
    axiom_i.record(any_nonzero, || "the 4-linear form vanishes identically".into());

    let ax2_parts: Vec<CheckReport> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = sample_rng(seed, s as u64);
            let mut r = CheckReport::new("fts_axiom_ii", AXIOM_II, Mode::Sampled);
            let x = f.random_vector(&mut rng, n, height);
            let y = f.random_vector(&mut rng, n, height);
            let xxx = t.triple(&x, &x, &x);
            let lhs = t.triple(&xxx, &x, &y);
            let mut rhs = f.vscale(&t.bform(&y, &x), &xxx);
            f.vaxpy(&mut rhs, &t.bform(&y, &xxx), &x);
            r.record(lhs == rhs, || format!("sample {s}: x={} y={}", f.format_vector(&x), f.format_vector(&y)));
            r
        })
        .collect();
    let axiom_ii = merge_all("fts_axiom_ii", AXIOM_II, Mode::Sampled, ax2_parts);

    vec![skew, symmetric, axiom_i, axiom_ii]
}

/// Strict regularity `u u V ⊆ K u`: every `t(u, u, e_i)` is a multiple of `u`
/// (exact rank test).
pub fn is_strictly_regular<F: Field>(t: &TripleSystem<F>, u: &[F::Elem]) -> Result<bool> {
    let f = t.field();
    let n = t.dim();
    if u.len() != n {
        return Err(Error::Dimension { expected: n, got: u.len() });
    }
    if f.vis_zero(u) {
        return Err(Error::Precondition("strict regularity is defined for nonzero u".into()));
    }
    let mut rows = vec![u.to_vec()];
    for i in 0..n {
        let v = t.triple_from_table(u, u, &t.basis(i));
        if !f.vis_zero(&v) {
            rows.push(v);
        }
    }
    Ok(Matrix::from_rows(rows).rank(f) == 1)
}

/// For `⟨x,xxx⟩ = 12k²`, the pair `u₁ = x/2 + xxx/(12k)`, `u₂ = −x/(2k) + xxx/(12k²)`,
/// verified strictly regular with `⟨u₁,u₂⟩ = 1`.
pub fn supplementary_pair<F: Field>(t: &TripleSystem<F>, x: &[F::Elem], k: &F::Elem) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
    let f = t.field();
    if f.is_zero(k) {
        return Err(Error::Precondition("k must be nonzero".into()));
    }
    let xxx = t.triple(x, x, x);
    let q = t.bform(x, &xxx);
    let twelve = f.from_i64(12);
    let target = f.mul(&twelve, &f.square(k));
    if q != target {
        return Err(Error::Precondition(format!(
            "<x,xxx> = {} but 12k^2 = {}",
            f.format(&q),
            f.format(&target)
        )));
    }
    let inv = |c: &F::Elem| f.inv(c).expect("nonzero");
    let mut u1 = f.vscale(&f.half(), x);
    f.vaxpy(&mut u1, &inv(&f.mul(&twelve, k)), &xxx);
    let mut u2 = f.vscale(&f.neg(&inv(&f.mul(&f.from_i64(2), k))), x);
    f.vaxpy(&mut u2, &inv(&target), &xxx);
    if !is_strictly_regular(t, &u1)? || !is_strictly_regular(t, &u2)? {
        return Err(Error::Construction("supplementary pair is not strictly regular".into()));
    }
    if !f.is_one(&t.bform(&u1, &u2)) {
        return Err(Error::Construction("<u1,u2> != 1".into()));
    }
    Ok((u1, u2))
}

/// Reads off `λ` with `t'(ψe_i,ψe_j,ψe_k) = λψ(t(e_i,e_j,e_k))` from the first
/// basis triple with a nonzero product.
pub fn detect_multiplier<F: Field>(t: &TripleSystem<F>, t2: &TripleSystem<F>, psi: &Matrix<F::Elem>) -> Option<F::Elem> {
    let f = t.field();
    let col = |i: usize| psi.column(i);
    for (i, j, k) in sorted_triples(t.dim()) {
        let rhs = psi.apply(f, &t.triple(&t.basis(i), &t.basis(j), &t.basis(k)));
        if let Some(m) = rhs.iter().position(|c| !f.is_zero(c)) {
            let lhs = t2.triple(&col(i), &col(j), &col(k));
            return f.div(&lhs[m], &rhs[m]);
        }
    }
    None
}

/// Checks that `ψ` is a similarity with multiplier `λ`: the triple condition on
/// all basis triples, and the form and quartic conditions on random samples.
pub fn verify_similarity<F: Field>(
    t: &TripleSystem<F>,
    t2: &TripleSystem<F>,
    psi: &Matrix<F::Elem>,
    lambda: &F::Elem,
    samples: usize,
    seed: u64,
    height: u32,
) -> Result<Vec<CheckReport>> {
    let f = t.field();
    let n = t.dim();
    if psi.rows() != t2.dim() || psi.cols() != n || psi.rank(f) != n || t2.dim() != n {
        return Err(Error::Precondition("psi must be a square invertible map between systems of equal dimension".into()));
    }
    if f.is_zero(lambda) {
        return Err(Error::Precondition("multiplier must be nonzero".into()));
    }
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|i| psi.column(i)).collect();
    let parts: Vec<CheckReport> = sorted_triples(n)
        .par_iter()
        .map(|&(i, j, k)| {
            let mut r = CheckReport::new("similarity_triple", SIMILARITY, Mode::Exhaustive);
            let lhs = t2.triple(&cols[i], &cols[j], &cols[k]);
            let rhs = f.vscale(lambda, &psi.apply(f, &t.triple(&t.basis(i), &t.basis(j), &t.basis(k))));
            r.record(lhs == rhs, || {
                format!("basis triple ({i},{j},{k}): {} vs {}", f.format_vector(&lhs), f.format_vector(&rhs))
            });
            r
        })
        .collect();
    let triple = merge_all("similarity_triple", SIMILARITY, Mode::Exhaustive, parts);

    let lambda2 = f.square(lambda);
    let parts: Vec<CheckReport> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = sample_rng(seed, s as u64);
            let mut r = CheckReport::new("similarity_form", SIMILARITY_FORM, Mode::Sampled);
            let x = f.random_vector(&mut rng, n, height);
            let y = f.random_vector(&mut rng, n, height);
            let (px, py) = (psi.apply(f, &x), psi.apply(f, &y));
            let form_ok = t2.bform(&px, &py) == f.mul(lambda, &t.bform(&x, &y));
            let quartic_ok = quartic(t2, &px) == f.mul(&lambda2, &quartic(t, &x));
            r.record(form_ok && quartic_ok, || {
                format!("sample {s}: form ok {form_ok}, quartic ok {quartic_ok}, x={}", f.format_vector(&x))
            });
            r
        })
        .collect();
    let form = merge_all("similarity_form", SIMILARITY_FORM, Mode::Sampled, parts);
    Ok(vec![triple, form])
}

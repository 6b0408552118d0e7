use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{InvolutiveAlgebra, Sparse};
use crate::report::{CheckReport, Mode};
use crate::scalars::Field;

pub const STRUCTURABLE_IDENTITY: &str = "[V_{x,y},V_{z,w}] = V_{{x,y,z},w} - V_{z,{y,x,w}}";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructurableMode {
    /// All basis quadruples; certifies the identity since it is multilinear.
    Exhaustive,
    /// Random quadruples, each applied to a random test vector.
    Sampled { samples: usize, seed: u64, height: u32 },
}

/// Sparse operator: `cols[k]` lists the nonzero rows of column `k`.
struct SparseOp<E> {
    cols: Vec<Sparse<E>>,
}

fn basis_v_ops<F: Field>(a: &InvolutiveAlgebra<F>) -> Vec<SparseOp<F::Elem>> {
    let n = a.dim();
    let f = a.field();
    (0..n * n)
        .into_par_iter()
        .map(|ij| {
            let (x, y) = (a.basis(ij / n), a.basis(ij % n));
            let cols = (0..n)
                .map(|k| {
                    let v = a.v_op(&x, &y, &a.basis(k));
                    v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
                })
                .collect();
            SparseOp { cols }
        })
        .collect()
}

/// Checks the structurable identity `[V_{x,y},V_{z,w}] = V_{{x,y,z},w} − V_{z,{y,x,w}}`.
pub fn check_structurable<F: Field>(a: &InvolutiveAlgebra<F>, mode: StructurableMode) -> CheckReport {
    match mode {
        StructurableMode::Exhaustive => exhaustive(a),
        StructurableMode::Sampled { samples, seed, height } => sampled(a, samples, seed, height),
    }
}

fn exhaustive<F: Field>(a: &InvolutiveAlgebra<F>) -> CheckReport {
    let n = a.dim();
    let f = a.field();
    let ops = basis_v_ops(a);
    let op = |i: usize, j: usize| &ops[i * n + j];

    // One task per (i, j); each owns a dense n×n scratch buffer.
    let partial: Vec<CheckReport> = (0..n * n)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let mut rep = CheckReport::new("structurable_identity", STRUCTURABLE_IDENTITY, Mode::Exhaustive);
            let mut scratch = vec![f.zero(); n * n];
            let vij = op(i, j);
            let vji = op(j, i);
            for k in 0..n {
                // {i,j,k} is column k of V_{e_i,e_j}
                let xyz = &vij.cols[k];
                for l in 0..n {
                    let vkl = op(k, l);
                    // + V_ij V_kl − V_kl V_ij
                    for c in 0..n {
                        for (r1, c1) in &vkl.cols[c] {
                            for (r2, c2) in &vij.cols[*r1] {
                                f.mul_add(&mut scratch[r2 * n + c], c1, c2);
                            }
                        }
                        for (r1, c1) in &vij.cols[c] {
                            for (r2, c2) in &vkl.cols[*r1] {
                                let t = f.mul(c1, c2);
                                f.sub_assign(&mut scratch[r2 * n + c], &t);
                            }
                        }
                    }
                    // − V_{{i,j,k}, l}
                    for (m, cm) in xyz {
                        let vml = op(*m, l);
                        for c in 0..n {
                            for (r, t) in &vml.cols[c] {
                                let p = f.mul(cm, t);
                                f.sub_assign(&mut scratch[r * n + c], &p);
                            }
                        }
                    }
                    // + V_{k, {j,i,l}}; {j,i,l} is column l of V_{e_j,e_i}
                    for (m, cm) in &vji.cols[l] {
                        let vkm = op(k, *m);
                        for c in 0..n {
                            for (r, t) in &vkm.cols[c] {
                                f.mul_add(&mut scratch[r * n + c], cm, t);
                            }
                        }
                    }
                    let bad = scratch.iter().position(|x| !f.is_zero(x));
                    rep.record(bad.is_none(), || {
                        let p = bad.unwrap();
                        let (r, c) = (p / n, p % n);
                        let names = a.names();
                        format!(
                            "(x,y,z,w) = ({}, {}, {}, {}): applied to {} the two sides differ by {} on {}",
                            names[i], names[j], names[k], names[l], names[c], f.format(&scratch[p]), names[r]
                        )
                    });
                    if bad.is_some() {
                        scratch.iter_mut().for_each(|x| *x = f.zero());
                    }
                }
            }
            rep
        })
        .collect();

    let mut report = CheckReport::new("structurable_identity", STRUCTURABLE_IDENTITY, Mode::Exhaustive);
    for p in partial {
        report.merge(p);
    }
    report
}

fn sampled<F: Field>(a: &InvolutiveAlgebra<F>, samples: usize, seed: u64, height: u32) -> CheckReport {
    let n = a.dim();
    let f = a.field();
    let partial: Vec<CheckReport> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s as u64);
            let mut rep = CheckReport::new("structurable_identity", STRUCTURABLE_IDENTITY, Mode::Sampled);
            let [x, y, z, w, u] = std::array::from_fn(|_| f.random_vector(&mut rng, n, height));
            let lhs = f.vsub(&a.v_op(&x, &y, &a.v_op(&z, &w, &u)), &a.v_op(&z, &w, &a.v_op(&x, &y, &u)));
            let xyz = a.v_op(&x, &y, &z);
            let yxw = a.v_op(&y, &x, &w);
            let rhs = f.vsub(&a.v_op(&xyz, &w, &u), &a.v_op(&z, &yxw, &u));
            rep.record(lhs == rhs, || {
                format!(
                    "sample {s}: x={} y={} z={} w={} u={}: lhs={} rhs={}",
                    f.format_vector(&x),
                    f.format_vector(&y),
                    f.format_vector(&z),
                    f.format_vector(&w),
                    f.format_vector(&u),
                    f.format_vector(&lhs),
                    f.format_vector(&rhs)
                )
            });
            rep
        })
        .collect();
    let mut report = CheckReport::new("structurable_identity", STRUCTURABLE_IDENTITY, Mode::Sampled);
    for p in partial {
        report.merge(p);
    }
    report
}

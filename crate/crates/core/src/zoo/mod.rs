//! Structurable algebras built from Jordan, associative and hermitian data:
//! `A⁺`, matrix algebras `M(J,η)`, the Cayley–Dickson doubling, `E ⊕ W`, and
//! the twisted biquaternion algebras of type E6/E7/E8.

mod cd;
mod cubic;
mod etype;

pub use cd::{cayley_dickson, check_jordan_norm, CayleyDickson};
pub use cubic::{matrix_structurable, split_cubic_jordan, CubicJordan, MatrixAlgebra};
pub use etype::{e_type_algebra, ETypeAlgebra, LambdaWitness};

use crate::algebra::InvolutiveAlgebra;
use crate::error::{Error, Result};
use crate::scalars::Field;

/// `A⁺`: the product `x∘y = ½(xy + yx)` with the trivial involution.
pub fn jordan_plus<F: Field>(a: &InvolutiveAlgebra<F>) -> Result<InvolutiveAlgebra<F>> {
    let f = a.field().clone();
    let n = a.dim();
    let half = f.half();
    let prod = |i: usize, j: usize| {
        let mut v = f.zeros(n);
        for (k, c) in a.basis_product(i, j).iter().chain(a.basis_product(j, i)) {
            f.mul_add(&mut v[*k], &half, c);
        }
        v
    };
    let conj = |i: usize| f.unit_vector(n, i);
    let names = a.names().iter().map(|s| format!("{s}+")).collect();
    InvolutiveAlgebra::from_fn(f.clone(), n, prod, conj, a.unit().to_vec(), names)
}

/// `E ⊕ W` for a hermitian form `h` on a left `E`-module `W`:
/// `(e₁+w₁)(e₂+w₂) = (e₁e₂ + h(w₂,w₁)) + (e₂w₁ + ē₁w₂)`, `conj(e+w) = ē + w`.
/// `act(e, w)` is the left action; coordinates are those of `E` followed by `W`.
pub fn hermitian_structurable<F: Field>(
    e: &InvolutiveAlgebra<F>,
    w_dim: usize,
    act: impl Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
    h: impl Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
    w_names: &[String],
) -> Result<InvolutiveAlgebra<F>> {
    let f = e.field().clone();
    let m = e.dim();
    let n = m + w_dim;
    if w_names.len() != w_dim {
        return Err(Error::Dimension { expected: w_dim, got: w_names.len() });
    }
    let wb = |i: usize| f.unit_vector(w_dim, i);
    for i in 0..w_dim {
        for j in 0..w_dim {
            let (wi, wj) = (wb(i), wb(j));
            if e.conj(&h(&wi, &wj)) != h(&wj, &wi) {
                return Err(Error::Construction(format!("h is not hermitian on ({}, {})", w_names[i], w_names[j])));
            }
            for k in 0..m {
                let ek = e.basis(k);
                if h(&act(&ek, &wi), &wj) != e.mul(&ek, &h(&wi, &wj)) {
                    return Err(Error::Construction(format!("h is not E-linear in its first argument at {}", e.names()[k])));
                }
            }
        }
    }
    let split = |x: usize| -> (Vec<F::Elem>, Vec<F::Elem>) {
        if x < m {
            (e.basis(x), f.zeros(w_dim))
        } else {
            (f.zeros(m), wb(x - m))
        }
    };
    let prod = |x: usize, y: usize| {
        let (e1, w1) = split(x);
        let (e2, w2) = split(y);
        let mut head = e.mul(&e1, &e2);
        if x >= m && y >= m {
            head = f.vadd(&head, &h(&w2, &w1));
        }
        let mut tail = f.zeros(w_dim);
        if x >= m {
            tail = f.vadd(&tail, &act(&e2, &w1));
        }
        if y >= m {
            tail = f.vadd(&tail, &act(&e.conj(&e1), &w2));
        }
        head.extend(tail);
        head
    };
    let conj = |x: usize| {
        if x < m {
            let mut v = e.conj(&e.basis(x));
            v.extend(f.zeros(w_dim));
            v
        } else {
            f.unit_vector(n, x)
        }
    };
    let mut unit = e.unit().to_vec();
    unit.extend(f.zeros(w_dim));
    let names = e.names().iter().cloned().chain(w_names.iter().cloned()).collect();
    InvolutiveAlgebra::from_fn(f.clone(), n, prod, conj, unit, names)
}

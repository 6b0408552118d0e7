//! Pseudo-quadratic quadrangular algebras over a quadratic pair, their triple
//! system, the `ξ`-decomposition and the hermitian structurable algebra on `X`.

mod checks;
mod decomposition;

use std::sync::Arc;

pub use checks::{check_axioms, check_etype_module_compat, check_fts_bridge, check_identities, check_module_compat};
pub use decomposition::{isotope_multiplier_check, pq_decompose, pq_decompose_at, verify_pq_similarity, PQDecomposition, PqStructurable};

use crate::algebra::InvolutiveAlgebra;
use crate::clifford::quaternion_algebra;
use crate::error::{Error, Result};
use crate::fts::{FnTriple, TripleSystem};
use crate::scalars::Field;

/// `(L, σ)`: a quadratic extension with its Galois involution or a quaternion
/// algebra with the standard involution; the unit is basis element 0.
#[derive(Clone, Debug)]
pub struct QuadraticPair<F: Field> {
    algebra: InvolutiveAlgebra<F>,
}

impl<F: Field> QuadraticPair<F> {
    /// `K(γ)` with `γ² = d`, basis `1, γ`.
    pub fn extension(field: F, d: F::Elem) -> Result<Self> {
        if field.is_zero(&d) || field.is_square(&d) == Some(true) {
            return Err(Error::Parameter(format!("d = {} must be a non-square", field.format(&d))));
        }
        let f = field.clone();
        let prod = |a: usize, b: usize| {
            let mut v = f.zeros(2);
            if a + b == 2 {
                v[0] = d.clone();
            } else {
                v[a + b] = f.one();
            }
            v
        };
        let conj = |a: usize| {
            let mut v = f.zeros(2);
            v[a] = if a == 1 { f.from_i64(-1) } else { f.one() };
            v
        };
        let alg = InvolutiveAlgebra::from_fn(field.clone(), 2, prod, conj, field.unit_vector(2, 0), vec!["1".into(), "γ".into()])?;
        Ok(QuadraticPair { algebra: alg })
    }

    /// The quaternion algebra `(a, b)` with basis `1, i, j, ij`.
    pub fn quaternion(field: F, a: F::Elem, b: F::Elem) -> Result<Self> {
        let alg = quaternion_algebra(&field, &a, &b, ["1", "i", "j", "ij"])?;
        Ok(QuadraticPair { algebra: alg })
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        &self.algebra
    }
}

/// A standard pseudo-quadratic space `X = Lⁿ` with
/// `h(x,y) = Σ xᵢ^σ aᵢ yᵢ` for skew coefficients `aᵢ`.
#[derive(Clone, Debug)]
pub struct Quadrangular<F: Field> {
    pair: QuadraticPair<F>,
    coeffs: Vec<Vec<F::Elem>>,
    transposed: bool,
}

pub fn pseudo_quadratic_quadrangular<F: Field>(pair: QuadraticPair<F>, coeffs: Vec<Vec<F::Elem>>) -> Result<Quadrangular<F>> {
    let l = pair.algebra();
    if coeffs.is_empty() {
        return Err(Error::Parameter("at least one hermitian coefficient is needed".into()));
    }
    for (i, a) in coeffs.iter().enumerate() {
        l.check_len(a)?;
        let f = l.field();
        if f.vis_zero(a) || l.conj(a) != f.vneg(a) {
            return Err(Error::Parameter(format!("coefficient a_{} = {} is not a nonzero skew element", i + 1, f.format_vector(a))));
        }
    }
    Ok(Quadrangular { pair, coeffs, transposed: false })
}

impl<F: Field> Quadrangular<F> {
    pub fn field(&self) -> &F {
        self.l().field()
    }

    pub fn l(&self) -> &InvolutiveAlgebra<F> {
        self.pair.algebra()
    }

    /// The same data with `h(x,y)` replaced by `h(y,x)`; a deliberately broken
    /// instance for exercising the checks.
    pub fn transposed(&self) -> Self {
        Quadrangular { transposed: !self.transposed, ..self.clone() }
    }

    pub fn coeffs(&self) -> &[Vec<F::Elem>] {
        &self.coeffs
    }

    /// `dim_K L`.
    pub fn dim_l(&self) -> usize {
        self.l().dim()
    }

    /// `dim_K X`.
    pub fn dim_x(&self) -> usize {
        self.dim_l() * self.coeffs.len()
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.l().unit().to_vec()
    }

    pub fn sigma(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.l().conj(v)
    }

    pub fn lmul(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        self.l().mul(u, v)
    }

    /// `q(u) = u u^σ`.
    pub fn q(&self, u: &[F::Elem]) -> F::Elem {
        self.l().mul(u, &self.sigma(u))[0].clone()
    }

    /// `f(u,v) = q(u+v) − q(u) − q(v)`.
    pub fn f(&self, u: &[F::Elem], v: &[F::Elem]) -> F::Elem {
        let k = self.field();
        k.sub(&k.sub(&self.q(&k.vadd(u, v)), &self.q(u)), &self.q(v))
    }

    /// `v⁻¹ = v^σ/q(v)`.
    pub fn linv(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let k = self.field();
        k.inv(&self.q(v)).map(|c| k.vscale(&c, &self.sigma(v)))
    }

    fn component<'a>(&self, x: &'a [F::Elem], i: usize) -> &'a [F::Elem] {
        let m = self.dim_l();
        &x[i * m..(i + 1) * m]
    }

    /// Right action `x·v`, componentwise.
    pub fn act(&self, x: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        (0..self.coeffs.len()).flat_map(|i| self.lmul(self.component(x, i), v)).collect()
    }

    /// `h(x,y) = Σ xᵢ^σ aᵢ yᵢ`.
    pub fn h(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let (x, y) = if self.transposed { (y, x) } else { (x, y) };
        let k = self.field();
        let mut acc = k.zeros(self.dim_l());
        for (i, a) in self.coeffs.iter().enumerate() {
            let t = self.lmul(&self.lmul(&self.sigma(self.component(x, i)), a), self.component(y, i));
            acc = k.vadd(&acc, &t);
        }
        acc
    }

    /// `θ(a,v) = ½h(a, av)`.
    pub fn theta(&self, a: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.field();
        k.vscale(&k.half(), &self.h(a, &self.act(a, v)))
    }

    /// `π(a) = θ(a, 1)`.
    pub fn pi(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.theta(a, &self.one())
    }

    /// `g(a,b) = ½f(h(a,b), 1)`.
    pub fn g(&self, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
        let k = self.field();
        k.mul(&k.half(), &self.f(&self.h(a, b), &self.one()))
    }

    /// `xyz = ½(x(h(y,z)+h(z,y)) + y(h(x,z)+h(z,x)) + z(h(x,y)+h(y,x)))`.
    pub fn triple(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.field();
        let hs = |a: &[F::Elem], b: &[F::Elem]| k.vadd(&self.h(a, b), &self.h(b, a));
        let mut acc = self.act(x, &hs(y, z));
        acc = k.vadd(&acc, &self.act(y, &hs(x, z)));
        acc = k.vadd(&acc, &self.act(z, &hs(x, y)));
        k.vscale(&k.half(), &acc)
    }

    pub fn basis_x(&self, i: usize) -> Vec<F::Elem> {
        self.field().unit_vector(self.dim_x(), i)
    }
}

/// The triple system on `X` with `⟨x,y⟩ = g(x,y)`.
pub fn fts_from_quadrangular<F: Field>(omega: &Quadrangular<F>) -> TripleSystem<F> {
    let (a, b) = (Arc::new(omega.clone()), Arc::new(omega.clone()));
    let src = FnTriple::new(
        omega.field().clone(),
        omega.dim_x(),
        move |x, y, z| a.triple(x, y, z),
        move |x, y| b.g(x, y),
    );
    TripleSystem::new(Arc::new(src))
}

#[cfg(test)]
mod tests;

use std::sync::Arc;

use crate::algebra::{InvolutiveAlgebra, SkewDimOneContext};
use crate::error::{Error, Result};
use crate::report::{sample_rng, CheckReport, Mode};
use crate::scalars::Field;

/// The split cubic Jordan algebra `K³`: `N(x) = x₁x₂x₃`, `T(x,y) = Σxᵢyᵢ`,
/// `x♯ = (x₂x₃, x₁x₃, x₁x₂)`, base point `(1,1,1)`.
#[derive(Clone, Debug)]
pub struct CubicJordan<F: Field> {
    field: F,
}

pub fn split_cubic_jordan<F: Field>(field: F) -> CubicJordan<F> {
    CubicJordan { field }
}

impl<F: Field> CubicJordan<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        3
    }

    pub fn base_point(&self) -> Vec<F::Elem> {
        vec![self.field.one(); 3]
    }

    pub fn norm(&self, x: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        f.mul(&f.mul(&x[0], &x[1]), &x[2])
    }

    pub fn trace(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        self.field.dot(x, y)
    }

    pub fn sharp(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        vec![f.mul(&x[1], &x[2]), f.mul(&x[0], &x[2]), f.mul(&x[0], &x[1])]
    }

    /// `x × y = (x+y)♯ − x♯ − y♯`.
    pub fn cross(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let c = |a: usize, b: usize| f.add(&f.mul(&x[a], &y[b]), &f.mul(&y[a], &x[b]));
        vec![c(1, 2), c(0, 2), c(0, 1)]
    }

    /// `N(1) = 1`, nondegenerate `T`, and the adjoint identity `(x♯)♯ = N(x)x` on samples.
    pub fn check(&self, samples: usize, seed: u64, height: u32) -> CheckReport {
        let f = &self.field;
        let mut r = CheckReport::new("cubic_adjoint_identity", "(x#)# = N(x) x", Mode::Sampled);
        r.record(f.is_one(&self.norm(&self.base_point())), || "N(base point) != 1".into());
        for s in 0..samples {
            let mut rng = sample_rng(seed, s as u64);
            let x = f.random_vector(&mut rng, 3, height);
            let ok = self.sharp(&self.sharp(&x)) == f.vscale(&self.norm(&x), &x);
            r.record(ok, || format!("sample {s}: x={}", f.format_vector(&x)));
        }
        r
    }
}

/// `M(J,η)` on coordinates `(k₁, j₁, j₂, k₂)` with the exchange involution,
/// `s₀ = diag(1,−1)` and `μ = 1`.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra<F: Field> {
    jordan: CubicJordan<F>,
    eta: F::Elem,
    context: SkewDimOneContext<F>,
}

/// `(k₁,j₁,j₂,k₂)(k₁',j₁',j₂',k₂') = (k₁k₁' + ηT(j₁,j₂'), k₁j₁' + k₂'j₁ + η j₂×j₂',
/// k₁'j₂ + k₂j₂' + j₁×j₁', k₂k₂' + ηT(j₂,j₁'))`.
pub fn matrix_structurable<F: Field>(jordan: CubicJordan<F>, eta: F::Elem) -> Result<MatrixAlgebra<F>> {
    let f = jordan.field().clone();
    if f.is_zero(&eta) {
        return Err(Error::Parameter("eta must be nonzero".into()));
    }
    let m = jordan.dim();
    let n = 2 + 2 * m;
    let prod = |a: usize, b: usize| {
        let (x, y) = (f.unit_vector(n, a), f.unit_vector(n, b));
        let (k1, j1, j2, k2) = split(&x, m);
        let (kk1, jj1, jj2, kk2) = split(&y, m);
        let mut out = Vec::with_capacity(n);
        out.push(f.add(&f.mul(k1, kk1), &f.mul(&eta, &jordan.trace(j1, jj2))));
        let mut b1 = f.vscale(k1, jj1);
        f.vaxpy(&mut b1, kk2, j1);
        f.vaxpy(&mut b1, &eta, &jordan.cross(j2, jj2));
        out.extend(b1);
        let mut c1 = f.vscale(kk1, j2);
        f.vaxpy(&mut c1, k2, jj2);
        f.vaxpy(&mut c1, &f.one(), &jordan.cross(j1, jj1));
        out.extend(c1);
        out.push(f.add(&f.mul(k2, kk2), &f.mul(&eta, &jordan.trace(j2, jj1))));
        out
    };
    let conj = |a: usize| {
        let b = if a == 0 {
            n - 1
        } else if a == n - 1 {
            0
        } else {
            a
        };
        f.unit_vector(n, b)
    };
    let mut unit = f.zeros(n);
    unit[0] = f.one();
    unit[n - 1] = f.one();
    let mut names = vec!["k1".to_string()];
    names.extend((1..=m).map(|i| format!("j1_{i}")));
    names.extend((1..=m).map(|i| format!("j2_{i}")));
    names.push("k2".into());
    let alg = InvolutiveAlgebra::from_fn(f.clone(), n, prod, conj, unit, names)?;
    let mut s0 = f.zeros(n);
    s0[0] = f.one();
    s0[n - 1] = f.from_i64(-1);
    let context = SkewDimOneContext::with_s0(Arc::new(alg), s0)?;
    Ok(MatrixAlgebra { jordan, eta, context })
}

fn split<E>(x: &[E], m: usize) -> (&E, &[E], &[E], &E) {
    (&x[0], &x[1..1 + m], &x[1 + m..1 + 2 * m], &x[1 + 2 * m])
}

impl<F: Field> MatrixAlgebra<F> {
    pub fn context(&self) -> &SkewDimOneContext<F> {
        &self.context
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        self.context.algebra()
    }

    pub fn jordan(&self) -> &CubicJordan<F> {
        &self.jordan
    }

    pub fn eta(&self) -> &F::Elem {
        &self.eta
    }

    /// `⟨x,y⟩ = k₁k₂' − k₂k₁' + ηT(j₁,j₂') − ηT(j₂,j₁')`.
    pub fn bform_closed(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        let f = self.jordan.field();
        let m = self.jordan.dim();
        let (k1, j1, j2, k2) = split(x, m);
        let (kk1, jj1, jj2, kk2) = split(y, m);
        let mut acc = f.sub(&f.mul(k1, kk2), &f.mul(k2, kk1));
        f.mul_add(&mut acc, &self.eta, &f.sub(&self.jordan.trace(j1, jj2), &self.jordan.trace(j2, jj1)));
        acc
    }

    /// `ν = 4k₁ηN(j₁) + 4k₂η²N(j₂) − 4η²T(j₁♯,j₂♯) + (ηT(j₁,j₂) − k₁k₂)²`.
    pub fn nu_closed(&self, x: &[F::Elem]) -> F::Elem {
        let f = self.jordan.field();
        let j = &self.jordan;
        let (k1, j1, j2, k2) = split(x, j.dim());
        let four = f.from_i64(4);
        let eta2 = f.square(&self.eta);
        let mut acc = f.mul(&four, &f.mul(&f.mul(k1, &self.eta), &j.norm(j1)));
        f.mul_add(&mut acc, &four, &f.mul(&f.mul(k2, &eta2), &j.norm(j2)));
        f.sub_assign(&mut acc, &f.mul(&four, &f.mul(&eta2, &j.trace(&j.sharp(j1), &j.sharp(j2)))));
        let tail = f.sub(&f.mul(&self.eta, &j.trace(j1, j2)), &f.mul(k1, k2));
        f.add_assign(&mut acc, &f.square(&tail));
        acc
    }
}

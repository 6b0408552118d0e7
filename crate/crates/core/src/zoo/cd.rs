use std::sync::Arc;

use crate::algebra::{InvolutiveAlgebra, SkewDimOneContext};
use crate::error::{Error, Result};
use crate::report::{sample_rng, CheckReport, Mode};
use crate::scalars::{Field, Matrix};

const NORM_AXIOMS: &str = "Q(kj) = k^4 Q(j), Q(U_j j') = Q(j)^2 Q(j')";

/// Samples the Jordan-norm axioms `Q(1) = 1`, `Q(kj) = k⁴Q(j)` and
/// `Q(U_j j') = Q(j)²Q(j')` with `U_j j' = 2j(jj') − j²j'`.
pub fn check_jordan_norm<F: Field>(
    j: &InvolutiveAlgebra<F>,
    q: &dyn Fn(&[F::Elem]) -> F::Elem,
    samples: usize,
    seed: u64,
    height: u32,
) -> CheckReport {
    let f = j.field();
    let n = j.dim();
    let mut r = CheckReport::new("jordan_norm_axioms", NORM_AXIOMS, Mode::Sampled);
    r.record(f.is_one(&q(j.unit())), || "Q(1) != 1".into());
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let x = f.random_vector(&mut rng, n, height);
        let y = f.random_vector(&mut rng, n, height);
        let k = f.random(&mut rng, height);
        let qx = q(&x);
        let homog = q(&f.vscale(&k, &x)) == f.mul(&f.pow(&k, 4), &qx);
        let mut u = f.vscale(&f.from_i64(2), &j.mul(&x, &j.mul(&x, &y)));
        u = f.vsub(&u, &j.mul(&j.mul(&x, &x), &y));
        let ujj = q(&u) == f.mul(&f.square(&qx), &q(&y));
        r.record(homog && ujj, || {
            format!("sample {s}: homogeneity ok {homog}, U-multiplicativity ok {ujj}, j={}", f.format_vector(&x))
        });
    }
    r
}

/// `CD(J,Q,μ) = J ⊕ s₀J` with
/// `(j₁,j₁')(j₂,j₂') = (j₁j₂ + μ(j₁'j₂'^θ)^θ, j₁^θj₂' + (j₁'^θj₂^θ)^θ)`,
/// `conj(j,j') = (j, −j'^θ)` and `b^θ = −b + ½T(b,1)1`.
#[derive(Clone, Debug)]
pub struct CayleyDickson<F: Field> {
    jordan: Arc<InvolutiveAlgebra<F>>,
    theta: Matrix<F::Elem>,
    mu: F::Elem,
    context: SkewDimOneContext<F>,
}

/// Validates the inputs (`Q(1) = 1`, `T` nondegenerate, `μ ≠ 0`, sampled norm
/// axioms) and builds the doubled algebra.
pub fn cayley_dickson<F: Field>(
    j: Arc<InvolutiveAlgebra<F>>,
    q: &dyn Fn(&[F::Elem]) -> F::Elem,
    trace: &dyn Fn(&[F::Elem], &[F::Elem]) -> F::Elem,
    mu: F::Elem,
    samples: usize,
    seed: u64,
) -> Result<CayleyDickson<F>> {
    let f = j.field().clone();
    let n = j.dim();
    if f.is_zero(&mu) {
        return Err(Error::Parameter("mu must be nonzero".into()));
    }
    let gram = Matrix::from_fn(n, n, |a, b| trace(&j.basis(a), &j.basis(b)));
    if gram.rank(&f) != n {
        return Err(Error::Precondition("trace form is degenerate".into()));
    }
    let report = check_jordan_norm(&j, q, samples, seed, 3);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "Jordan norm axiom failed: {}",
            report.counterexample.unwrap_or_default()
        )));
    }
    CayleyDickson::new(j, trace, mu)
}

impl<F: Field> CayleyDickson<F> {
    /// Builds the doubled algebra without checking the norm.
    pub fn new(j: Arc<InvolutiveAlgebra<F>>, trace: &dyn Fn(&[F::Elem], &[F::Elem]) -> F::Elem, mu: F::Elem) -> Result<Self> {
        let f = j.field().clone();
        let n = j.dim();
        let half = f.half();
        let cols: Vec<Vec<F::Elem>> = (0..n)
            .map(|a| {
                let b = j.basis(a);
                let mut v = f.vneg(&b);
                f.vaxpy(&mut v, &f.mul(&half, &trace(&b, j.unit())), j.unit());
                v
            })
            .collect();
        let theta = Matrix::from_columns(&cols, n);
        if theta.mul(&f, &theta) != Matrix::identity(&f, n) {
            return Err(Error::Construction("theta is not an involution".into()));
        }
        let th = |v: &[F::Elem]| theta.apply(&f, v);
        let prod = |a: usize, b: usize| {
            let x = f.unit_vector(2 * n, a);
            let y = f.unit_vector(2 * n, b);
            let (j1, j1p) = x.split_at(n);
            let (j2, j2p) = y.split_at(n);
            let mut head = j.mul(j1, j2);
            f.vaxpy(&mut head, &mu, &th(&j.mul(j1p, &th(j2p))));
            let tail = f.vadd(&j.mul(&th(j1), j2p), &th(&j.mul(&th(j1p), &th(j2))));
            head.extend(tail);
            head
        };
        let conj = |a: usize| {
            let mut v = f.zeros(2 * n);
            if a < n {
                v[a] = f.one();
            } else {
                let t = f.vneg(&theta.column(a - n));
                v[n..].clone_from_slice(&t);
            }
            v
        };
        let mut unit = j.unit().to_vec();
        unit.extend(f.zeros(n));
        let names = j.names().iter().cloned().chain(j.names().iter().map(|s| format!("s0·{s}"))).collect();
        let alg = InvolutiveAlgebra::from_fn(f.clone(), 2 * n, prod, conj, unit, names)?;
        let mut s0 = f.zeros(2 * n);
        s0[n..].clone_from_slice(j.unit());
        let context = SkewDimOneContext::with_s0(Arc::new(alg), s0)?;
        Ok(CayleyDickson { jordan: j, theta, mu, context })
    }

    pub fn context(&self) -> &SkewDimOneContext<F> {
        &self.context
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        self.context.algebra()
    }

    pub fn jordan(&self) -> &InvolutiveAlgebra<F> {
        &self.jordan
    }

    pub fn mu(&self) -> &F::Elem {
        &self.mu
    }

    /// Matrix of `θ` on `J`.
    pub fn theta(&self) -> &Matrix<F::Elem> {
        &self.theta
    }

    /// Coordinates of `j ⊕ s₀j'`.
    pub fn pair(&self, j: &[F::Elem], jp: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = j.to_vec();
        v.extend_from_slice(jp);
        v
    }
}

use std::sync::Arc;

use super::{fts_from_quadrangular, Quadrangular};
use crate::algebra::{InvolutiveAlgebra, SkewDimOneContext};
use crate::error::{Error, Result};
use crate::fts::{detect_multiplier, fts_from_skew_dim_one, verify_similarity, FnTriple, TripleSystem};
use crate::report::{sample_rng, CheckReport, Mode};
use crate::scalars::{Field, Matrix};
use crate::zoo::hermitian_structurable;

type V<F> = Vec<<F as Field>::Elem>;

/// `X = ξL ⊕ ξ^⊥` for the first basis vector `ξ` with `e = h(ξ,ξ) ≠ 0`.
/// Algebra coordinates are those of `v` in `ξv` followed by the coefficients
/// of a basis of `ξ^⊥ = {x : h(x,ξ) = 0}`.
#[derive(Clone, Debug)]
pub struct PQDecomposition<F: Field> {
    omega: Quadrangular<F>,
    xi: V<F>,
    e: V<F>,
    e_inv: V<F>,
    perp: Vec<V<F>>,
    basis: Matrix<F::Elem>,
    basis_inv: Matrix<F::Elem>,
}

pub fn pq_decompose<F: Field>(o: &Quadrangular<F>) -> Result<PQDecomposition<F>> {
    let k = o.field();
    let xi = (0..o.dim_x())
        .map(|i| o.basis_x(i))
        .find(|x| !k.vis_zero(&o.h(x, x)))
        .ok_or_else(|| Error::Precondition("h(x,x) vanishes on every basis vector".into()))?;
    pq_decompose_at(o, &xi)
}

/// The decomposition for a chosen `ξ` with `h(ξ,ξ) ≠ 0`.
pub fn pq_decompose_at<F: Field>(o: &Quadrangular<F>, xi: &[F::Elem]) -> Result<PQDecomposition<F>> {
    let k = o.field();
    let n = o.dim_x();
    if xi.len() != n {
        return Err(Error::Dimension { expected: n, got: xi.len() });
    }
    let xi = xi.to_vec();
    let e = o.h(&xi, &xi);
    if k.vis_zero(&e) {
        return Err(Error::Precondition("h(xi,xi) = 0; choose another xi".into()));
    }
    let e_inv = o.linv(&e).ok_or_else(|| Error::Precondition("h(xi,xi) is not invertible in L".into()))?;
    let cols: Vec<V<F>> = (0..n).map(|i| o.h(&o.basis_x(i), &xi)).collect();
    let perp = Matrix::from_columns(&cols, o.dim_l()).kernel(k);
    let mut bcols: Vec<V<F>> = (0..o.dim_l()).map(|j| o.act(&xi, &o.l().basis(j))).collect();
    bcols.extend(perp.iter().cloned());
    if bcols.len() != n {
        return Err(Error::Construction(format!("xi L + xi^perp has {} generators, expected {n}", bcols.len())));
    }
    let basis = Matrix::from_columns(&bcols, n);
    let basis_inv = basis.inverse(k).ok_or_else(|| Error::Construction("xi L and xi^perp are not complementary".into()))?;
    Ok(PQDecomposition { omega: o.clone(), xi, e, e_inv, perp, basis, basis_inv })
}

impl<F: Field> PQDecomposition<F> {
    pub fn omega(&self) -> &Quadrangular<F> {
        &self.omega
    }

    pub fn xi(&self) -> &[F::Elem] {
        &self.xi
    }

    /// `e = h(ξ,ξ)`.
    pub fn e(&self) -> &[F::Elem] {
        &self.e
    }

    pub fn e_inv(&self) -> &[F::Elem] {
        &self.e_inv
    }

    /// Basis of `ξ^⊥` in `X`-coordinates.
    pub fn perp(&self) -> &[V<F>] {
        &self.perp
    }

    pub fn dim(&self) -> usize {
        self.omega.dim_x()
    }

    /// `v̄ = e v^σ e⁻¹`.
    pub fn bar(&self, v: &[F::Elem]) -> V<F> {
        let o = &self.omega;
        o.lmul(&o.lmul(&self.e, &o.sigma(v)), &self.e_inv)
    }

    /// Algebra coordinates of `x ∈ X`.
    pub fn to_alg(&self, x: &[F::Elem]) -> V<F> {
        self.basis_inv.apply(self.omega.field(), x)
    }

    /// The element of `X` with algebra coordinates `a`.
    pub fn to_x(&self, a: &[F::Elem]) -> V<F> {
        self.basis.apply(self.omega.field(), a)
    }

    /// Splits algebra coordinates into `(v, x)` with `x ∈ ξ^⊥` in `X`-coordinates.
    pub fn parts(&self, a: &[F::Elem]) -> (V<F>, V<F>) {
        let k = self.omega.field();
        let m = self.omega.dim_l();
        let mut x = k.zeros(self.dim());
        for (c, p) in a[m..].iter().zip(&self.perp) {
            k.vaxpy(&mut x, c, p);
        }
        (a[..m].to_vec(), x)
    }

    pub fn from_parts(&self, v: &[F::Elem], x: &[F::Elem]) -> V<F> {
        let m = self.omega.dim_l();
        let mut out = v.to_vec();
        out.extend_from_slice(&self.to_alg(x)[m..]);
        out
    }

    /// `(ξv+x)(ξu+y) = ξ(vu + e h(y,x)) + (x ū + y v)` computed directly on `X`.
    pub fn product_closed(&self, a: &[F::Elem], b: &[F::Elem]) -> V<F> {
        let o = &self.omega;
        let k = o.field();
        let (v, x) = self.parts(a);
        let (u, y) = self.parts(b);
        let head = k.vadd(&o.lmul(&v, &u), &o.lmul(&self.e, &o.h(&y, &x)));
        let tail = k.vadd(&o.act(&x, &self.bar(&u)), &o.act(&y, &v));
        self.from_parts(&head, &tail)
    }

    /// `conj(ξv + x) = ξv̄ + x`.
    pub fn conj_closed(&self, a: &[F::Elem]) -> V<F> {
        let (v, x) = self.parts(a);
        self.from_parts(&self.bar(&v), &x)
    }

    /// `ψ(ξv + x) = ξv^σ + xe⁻¹`, from `X`-coordinates to algebra coordinates.
    pub fn psi(&self, x: &[F::Elem]) -> V<F> {
        let o = &self.omega;
        let (v, w) = self.parts(&self.to_alg(x));
        self.from_parts(&o.sigma(&v), &o.act(&w, &self.e_inv))
    }

    pub fn psi_matrix(&self) -> Matrix<F::Elem> {
        let cols: Vec<V<F>> = (0..self.dim()).map(|i| self.psi(&self.omega.basis_x(i))).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// Invariants of the splitting: `e^σ = −e`, `ξ^⊥` is the `L`-submodule
    /// `{x : h(x,ξ) = 0}`, `v ↦ v̄` is an involution of `L` whose skew space is
    /// `Ke`, `h' = e·h` is hermitian for it, and `v∘(w∘x) = (vw)∘x` with `v∘x = xv̄`.
    pub fn check(&self) -> CheckReport {
        let o = &self.omega;
        let k = o.field();
        let m = o.dim_l();
        let ls: Vec<V<F>> = (0..m).map(|i| o.l().basis(i)).collect();
        let mut r = CheckReport::new("pq_decomposition", "X = xi L + xi^perp, e = h(xi,xi) skew, skew(bar) = K e", Mode::Exhaustive);
        r.record(o.sigma(&self.e) == k.vneg(&self.e), || "e is not skew".into());
        let bar_plus_id: Vec<V<F>> = ls.iter().map(|b| k.vadd(&self.bar(b), b)).collect();
        let skew = Matrix::from_columns(&bar_plus_id, m).kernel(k);
        let ok = skew.len() == 1 && self.bar(&self.e) == k.vneg(&self.e);
        r.record(ok, || format!("skew space of bar has dimension {}", skew.len()));
        for (j, p) in self.perp.iter().enumerate() {
            r.record(k.vis_zero(&o.h(p, &self.xi)), || format!("perp vector {j} is not orthogonal to xi"));
            for (l, b) in ls.iter().enumerate() {
                let pv = o.act(p, b);
                r.record(k.vis_zero(&o.h(&pv, &self.xi)), || format!("perp vector {j} times basis {l} leaves xi^perp"));
            }
            for (i, p2) in self.perp.iter().enumerate() {
                let h1 = o.lmul(&self.e, &o.h(p, p2));
                let h2 = o.lmul(&self.e, &o.h(p2, p));
                r.record(self.bar(&h1) == h2, || format!("h' is not hermitian on perp pair ({j},{i})"));
            }
        }
        for (i, a) in ls.iter().enumerate() {
            r.record(self.bar(&self.bar(a)) == *a, || format!("bar is not an involution on basis {i}"));
            for (j, b) in ls.iter().enumerate() {
                let ok = self.bar(&o.lmul(a, b)) == o.lmul(&self.bar(b), &self.bar(a));
                r.record(ok, || format!("bar is not an anti-automorphism on ({i},{j})"));
                for (l, p) in self.perp.iter().enumerate() {
                    let lhs = o.act(&o.act(p, &self.bar(b)), &self.bar(a));
                    r.record(lhs == o.act(p, &self.bar(&o.lmul(a, b))), || format!("module law fails at ({i},{j}) on perp vector {l}"));
                }
            }
        }
        r
    }

    /// The hermitian structurable algebra `(L, ¯) ⊕ ξ^⊥` with `h' = e·h`,
    /// left action `v·x = x v̄`, and skew generator `s₀ = scale·e`.
    pub fn structurable(&self, scale: &F::Elem) -> Result<PqStructurable<F>> {
        let o = &self.omega;
        let k = o.field().clone();
        let m = o.dim_l();
        let p = self.perp.len();
        let l = o.l();
        let names: Vec<String> = l.names().iter().map(|s| format!("ξ·{s}")).collect();
        let e_alg = InvolutiveAlgebra::from_fn(
            k.clone(),
            m,
            |i, j| l.mul(&l.basis(i), &l.basis(j)),
            |i| self.bar(&l.basis(i)),
            l.unit().to_vec(),
            names,
        )?;
        let perp_vec = |w: &[F::Elem]| {
            let mut x = k.zeros(self.dim());
            for (c, v) in w.iter().zip(&self.perp) {
                k.vaxpy(&mut x, c, v);
            }
            x
        };
        let perp_coords = |x: &[F::Elem]| self.to_alg(x)[m..].to_vec();
        let act = |c: &[F::Elem], w: &[F::Elem]| perp_coords(&o.act(&perp_vec(w), &self.bar(c)));
        let h = |a: &[F::Elem], b: &[F::Elem]| o.lmul(&self.e, &o.h(&perp_vec(a), &perp_vec(b)));
        let w_names: Vec<String> = (1..=p).map(|j| format!("x{j}")).collect();
        let alg = hermitian_structurable(&e_alg, p, act, h, &w_names)?;
        let mut s0 = k.vscale(scale, &self.e);
        s0.extend(k.zeros(p));
        let context = SkewDimOneContext::with_s0(Arc::new(alg), s0)?;
        let psi = self.psi_matrix();
        let psi_inv = psi.inverse(&k).ok_or_else(|| Error::Construction("psi is not invertible".into()))?;
        Ok(PqStructurable { dec: self.clone(), scale: scale.clone(), context, psi, psi_inv })
    }
}

/// The hermitian structurable algebra attached to a decomposition, with its
/// skew generator and the map `ψ` from `X`.
#[derive(Clone, Debug)]
pub struct PqStructurable<F: Field> {
    dec: PQDecomposition<F>,
    scale: F::Elem,
    context: SkewDimOneContext<F>,
    psi: Matrix<F::Elem>,
    psi_inv: Matrix<F::Elem>,
}

impl<F: Field> PqStructurable<F> {
    pub fn decomposition(&self) -> &PQDecomposition<F> {
        &self.dec
    }

    pub fn context(&self) -> &SkewDimOneContext<F> {
        &self.context
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        self.context.algebra()
    }

    /// Multiple of `e` used as `s₀`.
    pub fn scale(&self) -> &F::Elem {
        &self.scale
    }

    pub fn psi_matrix(&self) -> &Matrix<F::Elem> {
        &self.psi
    }

    pub fn fts(&self) -> TripleSystem<F> {
        fts_from_skew_dim_one(&self.context)
    }

    /// `ψ⁻¹(V_{ψx, s₀ψy} ψz)`.
    pub fn v_pullback(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> V<F> {
        let k = self.context.field();
        let a = self.algebra();
        let (px, py, pz) = (self.psi.apply(k, x), self.psi.apply(k, y), self.psi.apply(k, z));
        let v = a.v_op(&px, &a.mul(self.context.s0(), &py), &pz);
        self.psi_inv.apply(k, &v)
    }

    /// `2V_{y,s₀y}y = 12·scale·(ξ(−π(z)v) + x(eπ(z)e⁻¹))` for `y = ξv + x`, `z = ξv^σ + xe`.
    pub fn check_cubic_formula(&self, samples: usize, seed: u64, height: u32) -> CheckReport {
        let d = &self.dec;
        let o = d.omega();
        let k = o.field();
        let a = self.algebra();
        let mut r = CheckReport::new("pq_cubic_formula", "2V_{y,s0 y}y = 12(xi(-pi(z)v) + x(e pi(z) e^-1))", Mode::Sampled);
        let c = k.mul(&k.from_i64(12), &self.scale);
        for s in 0..samples {
            let mut rng = sample_rng(seed, s as u64);
            let y = k.random_vector(&mut rng, d.dim(), height);
            let lhs = k.vscale(&k.from_i64(2), &a.v_op(&y, &a.mul(self.context.s0(), &y), &y));
            let (v, x) = d.parts(&y);
            let z = k.vadd(&o.act(d.xi(), &o.sigma(&v)), &o.act(&x, d.e()));
            let pz = o.pi(&z);
            let head = k.vneg(&o.lmul(&pz, &v));
            let tail = o.act(&x, &o.lmul(&o.lmul(d.e(), &pz), d.e_inv()));
            let rhs = k.vscale(&c, &d.from_parts(&head, &tail));
            r.record(lhs == rhs, || format!("sample {s}: y={}", k.format_vector(&y)));
        }
        r
    }
}

/// Compares the triple system on `X` with that of the structurable algebra
/// with `s₀ = scale·e` through `ψ`; returns the detected multiplier and the
/// similarity reports for it.
pub fn verify_pq_similarity<F: Field>(
    o: &Quadrangular<F>,
    scale: &F::Elem,
    samples: usize,
    seed: u64,
    height: u32,
) -> Result<(F::Elem, Vec<CheckReport>)> {
    let t = fts_from_quadrangular(o);
    let ps = pq_decompose(o)?.structurable(scale)?;
    let t2 = ps.fts();
    let lambda = detect_multiplier(&t, &t2, ps.psi_matrix()).ok_or_else(|| Error::Construction("no multiplier: psi kills every triple".into()))?;
    let reports = verify_similarity(&t, &t2, ps.psi_matrix(), &lambda, samples, seed, height)?;
    Ok((lambda, reports))
}

/// The isotope of the triple system by `u ∈ L*`: the symmetric trilinear map
/// with `xxx = 6q(u)⁻¹(xθ(x,u))u⁻¹`, and the form `q(u)⁻¹g`. The identity is then a
/// similarity with multiplier `q(u)⁻¹`.
pub fn isotope_multiplier_check<F: Field>(
    o: &Quadrangular<F>,
    u: &[F::Elem],
    samples: usize,
    seed: u64,
    height: u32,
) -> Result<(F::Elem, Vec<CheckReport>)> {
    let k = o.field().clone();
    o.l().check_len(u)?;
    let qu_inv = k.inv(&o.q(u)).ok_or_else(|| Error::Parameter("u must be invertible in L".into()))?;
    let u_inv = o.linv(u).expect("q(u) is invertible");
    let t = fts_from_quadrangular(o);
    let (oa, ob) = (Arc::new(o.clone()), Arc::new(o.clone()));
    let (ua, ka, ca, cb) = (u.to_vec(), k.clone(), qu_inv.clone(), qu_inv.clone());
    let cubic = move |x: &[F::Elem]| ka.vscale(&ca, &oa.act(&oa.act(x, &oa.theta(x, &ua)), &u_inv));
    let kb = k.clone();
    let triple = move |x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]| {
        let s = |a: &[F::Elem], b: &[F::Elem]| kb.vadd(a, b);
        let mut acc = cubic(&s(&s(x, y), z));
        acc = kb.vsub(&acc, &cubic(&s(x, y)));
        acc = kb.vsub(&acc, &cubic(&s(x, z)));
        acc = kb.vsub(&acc, &cubic(&s(y, z)));
        acc = kb.vadd(&acc, &cubic(x));
        acc = kb.vadd(&acc, &cubic(y));
        kb.vadd(&acc, &cubic(z))
    };
    let kc = k.clone();
    let bform = move |x: &[F::Elem], y: &[F::Elem]| kc.mul(&cb, &ob.g(x, y));
    let tu = TripleSystem::new(Arc::new(FnTriple::new(k.clone(), o.dim_x(), triple, bform)));
    let id = Matrix::identity(&k, o.dim_x());
    let mut detected = CheckReport::new("isotope_multiplier", "detected multiplier = q(u)^-1", Mode::Exhaustive);
    let found = detect_multiplier(&t, &tu, &id);
    detected.record(found.as_ref() == Some(&qu_inv), || {
        format!("detected {:?}, expected {}", found.as_ref().map(|c| k.format(c)), k.format(&qu_inv))
    });
    let mut reports = vec![detected];
    reports.extend(verify_similarity(&t, &tu, &id, &qu_inv, samples, seed, height)?);
    Ok((qu_inv, reports))
}

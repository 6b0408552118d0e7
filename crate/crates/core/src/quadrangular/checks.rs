use rand::Rng;

use super::decomposition::pq_decompose;
use super::{fts_from_quadrangular, Quadrangular};
use crate::error::Result;
use crate::report::{sample_rng, CheckReport, Mode};
use crate::scalars::Field;
use crate::zoo::ETypeAlgebra;

type V<F> = Vec<<F as Field>::Elem>;

fn rand_l<F: Field, R: Rng>(o: &Quadrangular<F>, rng: &mut R, height: u32) -> V<F> {
    o.field().random_vector(rng, o.dim_l(), height)
}

fn rand_x<F: Field, R: Rng>(o: &Quadrangular<F>, rng: &mut R, height: u32) -> V<F> {
    o.field().random_vector(rng, o.dim_x(), height)
}

/// Checks a map `X × L → X` or `X × X → L` for additivity and homogeneity in
/// each slot on all basis pairs, using the fixed scalar 2.
fn bilinear_on_basis<F: Field>(
    name: &str,
    anchor: &str,
    f: &F,
    left: &[V<F>],
    right: &[V<F>],
    map: impl Fn(&[F::Elem], &[F::Elem]) -> V<F>,
) -> CheckReport {
    let mut r = CheckReport::new(name, anchor, Mode::Exhaustive);
    let two = f.from_i64(2);
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            let base = map(a, b);
            let hom = map(&f.vscale(&two, a), b) == f.vscale(&two, &base) && map(a, &f.vscale(&two, b)) == f.vscale(&two, &base);
            r.record(hom, || format!("homogeneity fails at basis pair ({i},{j})"));
            for (k, a2) in left.iter().enumerate().skip(i) {
                let ok = map(&f.vadd(a, a2), b) == f.vadd(&base, &map(a2, b));
                r.record(ok, || format!("left additivity fails at ({i}+{k},{j})"));
            }
            for (k, b2) in right.iter().enumerate().skip(j) {
                let ok = map(a, &f.vadd(b, b2)) == f.vadd(&base, &map(a, b2));
                r.record(ok, || format!("right additivity fails at ({i},{j}+{k})"));
            }
        }
    }
    r
}

/// The defining axioms of a quadrangular algebra plus the standard condition.
/// Multilinear axioms run on basis tuples, the others on `samples` random inputs.
pub fn check_axioms<F: Field>(o: &Quadrangular<F>, samples: usize, seed: u64, height: u32) -> Vec<CheckReport> {
    let k = o.field();
    let xs: Vec<V<F>> = (0..o.dim_x()).map(|i| o.basis_x(i)).collect();
    let ls: Vec<V<F>> = (0..o.dim_l()).map(|i| o.l().basis(i)).collect();
    let one = o.one();
    let mut out = Vec::new();

    out.push(bilinear_on_basis("pq_A1", "(a,v) -> av is K-bilinear", k, &xs, &ls, |a, v| o.act(a, v)));

    let mut a2 = CheckReport::new("pq_A2", "a1 = a", Mode::Exhaustive);
    for (i, a) in xs.iter().enumerate() {
        a2.record(o.act(a, &one) == *a, || format!("basis vector {i}"));
    }
    out.push(a2);

    let mut a3 = CheckReport::new("pq_A3", "(av)v^-1 = a", Mode::Sampled);
    let mut b2 = CheckReport::new("pq_B2", "h(a,bv) = h(b,av) + f(h(a,b),1)v", Mode::Exhaustive);
    let mut b3 = CheckReport::new("pq_B3", "f(h(av,b),1) = f(h(a,b),v)", Mode::Exhaustive);
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in xs.iter().enumerate() {
            let hab = o.h(a, b);
            for (l, v) in ls.iter().enumerate() {
                let mut rhs = o.h(b, &o.act(a, v));
                k.vaxpy(&mut rhs, &o.f(&hab, &one), v);
                b2.record(o.h(a, &o.act(b, v)) == rhs, || format!("basis ({i},{j},{l})"));
                b3.record(o.f(&o.h(&o.act(a, v), b), &one) == o.f(&hab, v), || format!("basis ({i},{j},{l})"));
            }
        }
    }
    out.push(bilinear_on_basis("pq_B1", "h is K-bilinear", k, &xs, &xs, |a, b| o.h(a, b)));
    out.push(b2);
    out.push(b3);

    let mut c = CheckReport::new("pq_C", "theta(a,v) = h(a,av)/2", Mode::Sampled);
    let mut d1 = CheckReport::new("pq_D1", "a theta(a,v) = (a pi(a)) v", Mode::Sampled);
    let mut d2 = CheckReport::new("pq_D2", "pi(a) not in K for a != 0", Mode::Sampled);
    let mut std = CheckReport::new("pq_standard", "pi(au) = u^sigma pi(a) u", Mode::Sampled);
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let a = rand_x(o, &mut rng, height);
        let v = rand_l(o, &mut rng, height);
        if let Some(vi) = o.linv(&v) {
            a3.record(o.act(&o.act(&a, &v), &vi) == a, || format!("sample {s}: a={}, v={}", k.format_vector(&a), k.format_vector(&v)));
        }
        let half_h = k.vscale(&k.half(), &o.h(&a, &o.act(&a, &v)));
        c.record(o.theta(&a, &v) == half_h, || format!("sample {s}"));
        let pa = o.pi(&a);
        let ok = o.act(&a, &o.theta(&a, &v)) == o.act(&o.act(&a, &pa), &v);
        d1.record(ok, || format!("sample {s}: a={}, v={}", k.format_vector(&a), k.format_vector(&v)));
        if !k.vis_zero(&a) {
            let in_k = pa[1..].iter().all(|e| k.is_zero(e));
            d2.record(!in_k, || format!("sample {s}: pi({}) lies in K", k.format_vector(&a)));
        }
        let lhs = o.pi(&o.act(&a, &v));
        let rhs = o.lmul(&o.lmul(&o.sigma(&v), &pa), &v);
        std.record(lhs == rhs, || format!("sample {s}"));
    }
    let note = format!("anisotropy: not falsified ({} samples)", d2.cases);
    let d2 = if d2.passed() { d2.with_note(note) } else { d2 };
    out.extend([a3, c, d1, d2, std]);
    out
}

/// Identities (i)-(v) that follow from the axioms.
pub fn check_identities<F: Field>(o: &Quadrangular<F>, samples: usize, seed: u64, height: u32) -> Vec<CheckReport> {
    let k = o.field();
    let one = o.one();
    let xs: Vec<V<F>> = (0..o.dim_x()).map(|i| o.basis_x(i)).collect();
    let ls: Vec<V<F>> = (0..o.dim_l()).map(|i| o.l().basis(i)).collect();

    let mut i1 = CheckReport::new("pq_identity_i", "h(a,b) = -h(b,a)^sigma", Mode::Exhaustive);
    let mut i2 = CheckReport::new("pq_identity_ii", "f(h(a,bv),1) = f(h(a,b),v^sigma)", Mode::Exhaustive);
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in xs.iter().enumerate() {
            i1.record(o.h(a, b) == k.vneg(&o.sigma(&o.h(b, a))), || format!("basis ({i},{j})"));
            for (l, v) in ls.iter().enumerate() {
                let ok = o.f(&o.h(a, &o.act(b, v)), &one) == o.f(&o.h(a, b), &o.sigma(v));
                i2.record(ok, || format!("basis ({i},{j},{l})"));
            }
        }
    }

    let mut i3 = CheckReport::new("pq_identity_iii", "(au)v = -(av^sigma)u^sigma + a f(u,v^sigma)", Mode::Sampled);
    let mut i4 = CheckReport::new("pq_identity_iv", "h(a pi(a),b) + theta(a,h(a,b)) = 0", Mode::Sampled);
    let mut i5 = CheckReport::new(
        "pq_identity_v",
        "theta(av,w) = theta(a,w^sigma)^sigma q(v) - f(w,v^sigma) theta(a,v)^sigma + f(theta(a,v),w^sigma) v^sigma",
        Mode::Sampled,
    );
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let a = rand_x(o, &mut rng, height);
        let b = rand_x(o, &mut rng, height);
        let u = rand_l(o, &mut rng, height);
        let v = rand_l(o, &mut rng, height);
        let w = rand_l(o, &mut rng, height);
        let (us, vs, ws) = (o.sigma(&u), o.sigma(&v), o.sigma(&w));

        let mut rhs = k.vneg(&o.act(&o.act(&a, &vs), &us));
        k.vaxpy(&mut rhs, &o.f(&u, &vs), &a);
        i3.record(o.act(&o.act(&a, &u), &v) == rhs, || format!("sample {s}"));

        let sum = k.vadd(&o.h(&o.act(&a, &o.pi(&a)), &b), &o.theta(&a, &o.h(&a, &b)));
        i4.record(k.vis_zero(&sum), || format!("sample {s}: a={}", k.format_vector(&a)));

        let tav = o.theta(&a, &v);
        let mut rhs = k.vscale(&o.q(&v), &o.sigma(&o.theta(&a, &ws)));
        k.vaxpy(&mut rhs, &k.neg(&o.f(&w, &vs)), &o.sigma(&tav));
        k.vaxpy(&mut rhs, &o.f(&tav, &ws), &vs);
        i5.record(o.theta(&o.act(&a, &v), &w) == rhs, || format!("sample {s}"));
    }
    vec![i1, i2, i3, i4, i5]
}

/// Relations between the triple system on `X` and the quadrangular maps:
/// `xxx = 6xπ(x)` and `⟨x,xxx⟩ = −12q(π(x))`.
pub fn check_fts_bridge<F: Field>(o: &Quadrangular<F>, samples: usize, seed: u64, height: u32) -> Vec<CheckReport> {
    let k = o.field();
    let t = fts_from_quadrangular(o);
    let mut cube = CheckReport::new("pq_fts_cube", "xxx = 6 x pi(x)", Mode::Sampled);
    let mut quart = CheckReport::new("pq_fts_quartic", "<x,xxx> = -12 q(pi(x))", Mode::Sampled);
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let x = rand_x(o, &mut rng, height);
        let xxx = t.triple(&x, &x, &x);
        let pi = o.pi(&x);
        cube.record(xxx == k.vscale(&k.from_i64(6), &o.act(&x, &pi)), || format!("sample {s}: x={}", k.format_vector(&x)));
        let ok = t.bform(&x, &xxx) == k.mul(&k.from_i64(-12), &o.q(&pi));
        quart.record(ok, || format!("sample {s}: x={}", k.format_vector(&x)));
    }
    vec![cube, quart]
}

/// Compatibility of the triple system with the right `L`-action:
/// `(xyz)v = (xv)(yv)(zv)/q(v)`, `g(xv,yv) = q(v)g(x,y)`, `(xv)v^σ = q(v)x`,
/// and the `V`-operator law of the hermitian structurable algebra pulled back
/// to `X`, which also equals `½(x h(y,z) + y h(x,z) + z h(y,x))`.
pub fn check_module_compat<F: Field>(o: &Quadrangular<F>, samples: usize, seed: u64, height: u32) -> Result<Vec<CheckReport>> {
    let k = o.field();
    let t = fts_from_quadrangular(o);
    let dec = pq_decompose(o)?;
    let half = dec.structurable(&k.half())?;
    let mut tri = CheckReport::new("module_triple", "(xyz)v = (xv)(yv)(zv)/q(v)", Mode::Sampled);
    let mut form = CheckReport::new("module_form", "g(xv,yv) = q(v) g(x,y)", Mode::Sampled);
    let mut cliff = CheckReport::new("module_clifford", "(xv)v^sigma = q(v) x", Mode::Sampled);
    let mut vmod = CheckReport::new("module_v_operator", "(V_{x,s0 y} z)v = V_{xv,s0 yv}(zv)/q(v)", Mode::Sampled);
    let mut pull = CheckReport::new("v_pullback", "V_{x,s0 y} z = (x h(y,z) + y h(x,z) + z h(y,x))/2", Mode::Sampled);
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let x = rand_x(o, &mut rng, height);
        let y = rand_x(o, &mut rng, height);
        let z = rand_x(o, &mut rng, height);
        let v = rand_l(o, &mut rng, height);
        let qv = o.q(&v);
        let act = |w: &[F::Elem]| o.act(w, &v);
        cliff.record(o.act(&act(&x), &o.sigma(&v)) == k.vscale(&qv, &x), || format!("sample {s}"));
        form.record(o.g(&act(&x), &act(&y)) == k.mul(&qv, &o.g(&x, &y)), || format!("sample {s}"));
        let vxyz = half.v_pullback(&x, &y, &z);
        let mut expected = o.act(&x, &o.h(&y, &z));
        expected = k.vadd(&expected, &o.act(&y, &o.h(&x, &z)));
        expected = k.vadd(&expected, &o.act(&z, &o.h(&y, &x)));
        pull.record(vxyz == k.vscale(&k.half(), &expected), || format!("sample {s}: x={}", k.format_vector(&x)));
        let Some(qi) = k.inv(&qv) else { continue };
        let ok = act(&t.triple(&x, &y, &z)) == k.vscale(&qi, &t.triple(&act(&x), &act(&y), &act(&z)));
        tri.record(ok, || format!("sample {s}: v={}", k.format_vector(&v)));
        let ok = act(&vxyz) == k.vscale(&qi, &half.v_pullback(&act(&x), &act(&y), &act(&z)));
        vmod.record(ok, || format!("sample {s}: v={}", k.format_vector(&v)));
    }
    Ok(vec![tri, form, cliff, vmod, pull])
}

/// The module laws for an E-type algebra with its `L|_K`-action.
pub fn check_etype_module_compat<F: Field>(x: &ETypeAlgebra<F>, samples: usize, seed: u64, height: u32) -> Result<Vec<CheckReport>> {
    let f = x.field();
    let t = x.fts();
    let (n, m) = (x.dim(), x.module_generators().len());
    let mut tri = CheckReport::new("etype_module_triple", "(xyz)v = (xv)(yv)(zv)/q(v)", Mode::Sampled);
    let mut form = CheckReport::new("etype_module_form", "<xv,yv> = q(v) <x,y>", Mode::Sampled);
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let a = f.random_vector(&mut rng, n, height);
        let b = f.random_vector(&mut rng, n, height);
        let c = f.random_vector(&mut rng, n, height);
        let v = f.random_vector(&mut rng, m, height);
        let qv = x.q(&v);
        let (va, vb, vc) = (x.module_action(&a, &v)?, x.module_action(&b, &v)?, x.module_action(&c, &v)?);
        form.record(t.bform(&va, &vb) == f.mul(&qv, &t.bform(&a, &b)), || format!("sample {s}"));
        let Some(qi) = f.inv(&qv) else { continue };
        let ok = x.module_action(&t.triple(&a, &b, &c), &v)? == f.vscale(&qi, &t.triple(&va, &vb, &vc));
        tri.record(ok, || format!("sample {s}: v={}", f.format_vector(&v)));
    }
    Ok(vec![tri, form])
}

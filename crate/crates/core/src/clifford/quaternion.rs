use crate::algebra::InvolutiveAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{Conjugation, Field, Matrix, QuadExt, Quad};

/// Quaternion algebra `(a, b)`: basis `1, g₁, g₂, g₁g₂` with `g₁² = a`,
/// `g₂² = b`, `g₁g₂ = −g₂g₁`, standard involution.
pub fn quaternion_algebra<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, names: [&str; 4]) -> Result<InvolutiveAlgebra<F>> {
    if f.is_zero(a) || f.is_zero(b) {
        return Err(Error::Parameter("quaternion parameters must be nonzero".into()));
    }
    // Basis element k = g₁^(k&1) g₂^(k>>1); e_i e_j = sign · g₁^.. g₂^.. with
    // g₂g₁ = −g₁g₂ giving a sign when i has g₂ and j has g₁.
    let g = f.clone();
    let (a, b) = (a.clone(), b.clone());
    let prod = move |i: usize, j: usize| {
        let mut c = g.one();
        if (i >> 1) & 1 == 1 && j & 1 == 1 {
            c = g.neg(&c);
        }
        if i & 1 == 1 && j & 1 == 1 {
            c = g.mul(&c, &a);
        }
        if (i >> 1) & 1 == 1 && (j >> 1) & 1 == 1 {
            c = g.mul(&c, &b);
        }
        let mut v = g.zeros(4);
        v[i ^ j] = c;
        v
    };
    let h = f.clone();
    let conj = move |i: usize| {
        let mut v = h.zeros(4);
        v[i] = if i == 0 { h.one() } else { h.neg(&h.one()) };
        v
    };
    InvolutiveAlgebra::from_fn(f.clone(), 4, prod, conj, f.unit_vector(4, 0), names.iter().map(|s| s.to_string()).collect())
}

/// Reduced norm `x x̄` of a quaternion given in the standard basis.
pub fn quaternion_nrd<F: Field>(q: &InvolutiveAlgebra<F>, x: &[F::Elem]) -> F::Elem {
    q.mul(x, &q.conj(x))[0].clone()
}

/// Reduced trace `x + x̄`.
pub fn quaternion_trd<F: Field>(q: &InvolutiveAlgebra<F>, x: &[F::Elem]) -> F::Elem {
    q.field().add(&x[0], &x[0])
}

/// `A ⊗ B` with involution `bar ⊗ bar`; basis index `i·dim B + j`.
pub fn tensor_with_involution<F: Field>(a: &InvolutiveAlgebra<F>, b: &InvolutiveAlgebra<F>) -> Result<InvolutiveAlgebra<F>> {
    let f = a.field().clone();
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let prod = |x: usize, y: usize| {
        let (i1, j1) = (x / nb, x % nb);
        let (i2, j2) = (y / nb, y % nb);
        let mut v = f.zeros(n);
        for (k, c) in a.basis_product(i1, i2) {
            for (l, d) in b.basis_product(j1, j2) {
                f.mul_add(&mut v[k * nb + l], c, d);
            }
        }
        v
    };
    let conj = |x: usize| {
        let (i, j) = (x / nb, x % nb);
        let mut v = f.zeros(n);
        for (k, c) in a.basis_conj(i) {
            for (l, d) in b.basis_conj(j) {
                f.mul_add(&mut v[k * nb + l], c, d);
            }
        }
        v
    };
    let mut unit = f.zeros(n);
    for (i, c) in a.unit().iter().enumerate() {
        for (j, d) in b.unit().iter().enumerate() {
            unit[i * nb + j] = f.mul(c, d);
        }
    }
    let names = (0..n).map(|x| format!("{}⊗{}", a.names()[x / nb], b.names()[x % nb])).collect();
    InvolutiveAlgebra::from_fn(f.clone(), n, prod, conj, unit, names)
}

/// Biquaternion algebra `(a₁,b₁) ⊗ (a₂,b₂)` with reduced norm computed through
/// the splitting tower `K(√a₁)(√a₂)`.
#[derive(Clone, Debug)]
pub struct Biquaternion<F: Field> {
    params: [F::Elem; 4],
    q1: InvolutiveAlgebra<F>,
    q2: InvolutiveAlgebra<F>,
    algebra: InvolutiveAlgebra<F>,
    tower: QuadExt<QuadExt<F>>,
}

type TowerElem<F> = Quad<Quad<<F as Field>::Elem>>;

impl<F: Field> Biquaternion<F> {
    pub fn new(f: &F, a1: F::Elem, b1: F::Elem, a2: F::Elem, b2: F::Elem) -> Result<Self> {
        let q1 = quaternion_algebra(f, &a1, &b1, ["1", "l", "m", "lm"])?;
        let q2 = quaternion_algebra(f, &a2, &b2, ["1", "n", "r", "nr"])?;
        let algebra = tensor_with_involution(&q1, &q2)?;
        let inner = QuadExt::new_unchecked(f.clone(), a1.clone());
        let tower = QuadExt::new_unchecked(inner.clone(), inner.embed(&a2));
        Ok(Biquaternion { params: [a1, b1, a2, b2], q1, q2, algebra, tower })
    }

    pub fn q1(&self) -> &InvolutiveAlgebra<F> {
        &self.q1
    }

    pub fn q2(&self) -> &InvolutiveAlgebra<F> {
        &self.q2
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        &self.algebra
    }

    pub fn params(&self) -> &[F::Elem; 4] {
        &self.params
    }

    /// 2×2 image of the quaternion basis: `g₁ ↦ diag(√a, −√a)`, `g₂ ↦ [[0,b],[1,0]]`.
    fn split_quaternion(&self, root: &TowerElem<F>, b: &F::Elem) -> [Matrix<TowerElem<F>>; 4] {
        let t = &self.tower;
        let zero = t.zero();
        let one = t.one();
        let bb = t.embed(&t.base().embed(b));
        let id = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]]);
        let g1 = Matrix::from_rows(vec![vec![root.clone(), zero.clone()], vec![zero.clone(), t.neg(root)]]);
        let g2 = Matrix::from_rows(vec![vec![zero.clone(), bb], vec![one, zero]]);
        let g12 = g1.mul(t, &g2);
        [id, g1, g2, g12]
    }

    /// Splitting image of `z` as a 4×4 matrix over the tower.
    pub fn split_matrix(&self, z: &[F::Elem]) -> Matrix<TowerElem<F>> {
        let t = &self.tower;
        let alpha = t.embed(&t.base().gamma());
        let beta = t.gamma();
        let r1 = self.split_quaternion(&alpha, &self.params[1]);
        let r2 = self.split_quaternion(&beta, &self.params[3]);
        let mut m = Matrix::zero(t, 4, 4);
        for (idx, c) in z.iter().enumerate() {
            if self.algebra.field().is_zero(c) {
                continue;
            }
            let cc = t.embed(&t.base().embed(c));
            let (a, b) = (&r1[idx / 4], &r2[idx % 4]);
            for i in 0..4 {
                for j in 0..4 {
                    let k = t.mul(a.get(i / 2, j / 2), b.get(i % 2, j % 2));
                    let mut cur = m.get(i, j).clone();
                    t.mul_add(&mut cur, &cc, &k);
                    m.set(i, j, cur);
                }
            }
        }
        m
    }

    /// Reduced norm: the determinant of the splitting image, which lies in `K`.
    pub fn nrd(&self, z: &[F::Elem]) -> Result<F::Elem> {
        self.algebra.check_len(z)?;
        let det = self.split_matrix(z).det_expansion(&self.tower);
        let f = self.algebra.field();
        if !self.tower.base().is_zero(&det.b) || !f.is_zero(&det.a.b) {
            return Err(Error::Construction("splitting determinant left the base field".into()));
        }
        Ok(det.a.a)
    }

    /// Reduced trace `Trd(a⊗b) = Trd(a)Trd(b)`, i.e. four times the `1⊗1` coordinate.
    pub fn trd(&self, z: &[F::Elem]) -> F::Elem {
        let f = self.algebra.field();
        f.mul(&f.from_i64(4), &z[0])
    }

    /// Trace form `T(z, w) = Trd(zw)`.
    pub fn trace_form(&self, z: &[F::Elem], w: &[F::Elem]) -> F::Elem {
        self.trd(&self.algebra.mul(z, w))
    }

    /// Determinant of left multiplication by `z` on the 16-dimensional algebra.
    pub fn left_regular_det(&self, z: &[F::Elem]) -> F::Elem
    where
        F: Field,
    {
        self.algebra.left_matrix(z).det(self.algebra.field())
    }
}

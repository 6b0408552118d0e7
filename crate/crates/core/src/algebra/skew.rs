use std::sync::Arc;

use super::InvolutiveAlgebra;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Mode};
use crate::scalars::{Field, Matrix};

/// Eigenspace decomposition `A = H ⊕ S` of the involution.
#[derive(Clone, Debug)]
pub struct SkewDecomposition<E> {
    pub hermitian_basis: Vec<Vec<E>>,
    pub skew_basis: Vec<Vec<E>>,
}

/// Bases of the hermitian (`x̄ = x`) and skew (`x̄ = −x`) parts.
pub fn skew_decompose<F: Field>(a: &InvolutiveAlgebra<F>) -> SkewDecomposition<F::Elem> {
    let f = a.field();
    let conj = a.involution_matrix();
    let n = a.dim();
    let minus = Matrix::from_fn(n, n, |i, j| if i == j { f.sub(conj.get(i, j), &f.one()) } else { conj.get(i, j).clone() });
    let plus = Matrix::from_fn(n, n, |i, j| if i == j { f.add(conj.get(i, j), &f.one()) } else { conj.get(i, j).clone() });
    SkewDecomposition { hermitian_basis: minus.kernel(f), skew_basis: plus.kernel(f) }
}

/// A structurable algebra of skew-dimension one with a chosen skew generator
/// `s₀`, `s₀² = μ·1`.
#[derive(Clone, Debug)]
pub struct SkewDimOneContext<F: Field> {
    algebra: Arc<InvolutiveAlgebra<F>>,
    s0: Vec<F::Elem>,
    mu: F::Elem,
    decomposition: SkewDecomposition<F::Elem>,
}

impl<F: Field> SkewDimOneContext<F> {
    /// Uses the kernel basis vector of the skew part as `s₀`.
    pub fn new(algebra: Arc<InvolutiveAlgebra<F>>) -> Result<Self> {
        let dec = skew_decompose(&algebra);
        if dec.skew_basis.len() != 1 {
            return Err(Error::Construction(format!("skew part has dimension {}, expected 1", dec.skew_basis.len())));
        }
        let s0 = dec.skew_basis[0].clone();
        Self::assemble(algebra, s0, dec)
    }

    /// Uses the given skew element as `s₀`.
    pub fn with_s0(algebra: Arc<InvolutiveAlgebra<F>>, s0: Vec<F::Elem>) -> Result<Self> {
        algebra.check_len(&s0)?;
        let dec = skew_decompose(&algebra);
        if dec.skew_basis.len() != 1 {
            return Err(Error::Construction(format!("skew part has dimension {}, expected 1", dec.skew_basis.len())));
        }
        let f = algebra.field();
        if f.vis_zero(&s0) || algebra.conj(&s0) != f.vneg(&s0) {
            return Err(Error::Construction("s0 must be a nonzero skew element".into()));
        }
        Self::assemble(algebra, s0, dec)
    }

    fn assemble(algebra: Arc<InvolutiveAlgebra<F>>, s0: Vec<F::Elem>, decomposition: SkewDecomposition<F::Elem>) -> Result<Self> {
        let sq = algebra.mul(&s0, &s0);
        let mu = algebra
            .scalar_part(&sq)
            .ok_or_else(|| Error::Construction("s0² is not a scalar multiple of the unit".into()))?;
        if algebra.field().is_zero(&mu) {
            return Err(Error::Construction("s0² = 0".into()));
        }
        Ok(SkewDimOneContext { algebra, s0, mu, decomposition })
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<InvolutiveAlgebra<F>> {
        Arc::clone(&self.algebra)
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn s0(&self) -> &[F::Elem] {
        &self.s0
    }

    pub fn mu(&self) -> &F::Elem {
        &self.mu
    }

    pub fn decomposition(&self) -> &SkewDecomposition<F::Elem> {
        &self.decomposition
    }

    /// Same algebra with `s₀` replaced by `c·s₀`.
    pub fn rescaled(&self, c: &F::Elem) -> Result<Self> {
        Self::with_s0(self.algebra_arc(), self.field().vscale(c, &self.s0))
    }

    /// `⟨x,y⟩·1 = (x ȳ − y x̄) s₀`.
    pub fn bform(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        let a = &*self.algebra;
        let d = self.field().vsub(&a.mul(x, &a.conj(y)), &a.mul(y, &a.conj(x)));
        a.unit_coefficient(&a.mul(&d, &self.s0))
    }

    /// `⟨x,y⟩·1` as a full vector (for checking it is a multiple of the unit).
    pub fn bform_vector(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let a = &*self.algebra;
        let d = self.field().vsub(&a.mul(x, &a.conj(y)), &a.mul(y, &a.conj(x)));
        a.mul(&d, &self.s0)
    }

    /// `yzw = 2{y, s₀z, w} − ⟨z,w⟩y − ⟨z,y⟩w − ⟨y,w⟩z`.
    pub fn triple(&self, y: &[F::Elem], z: &[F::Elem], w: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let a = &*self.algebra;
        let s0z = a.mul(&self.s0, z);
        let mut r = f.vscale(&f.from_i64(2), &a.v_op(y, &s0z, w));
        f.vaxpy(&mut r, &f.neg(&self.bform(z, w)), y);
        f.vaxpy(&mut r, &f.neg(&self.bform(z, y)), w);
        f.vaxpy(&mut r, &f.neg(&self.bform(y, w)), z);
        r
    }

    /// Conjugate norm `ν(x) = ⟨x, xxx⟩ / (12μ)`.
    pub fn conjugate_norm(&self, x: &[F::Elem]) -> F::Elem {
        let f = self.field();
        let q = self.bform(x, &self.triple(x, x, x));
        let denom = f.mul(&f.from_i64(12), &self.mu);
        f.div(&q, &denom).expect("12μ is invertible")
    }

    /// Conjugate inverse `x̂ = −(1/(3μν(x))) s₀{x, s₀x, x}`.
    pub fn conjugate_inverse(&self, x: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.algebra.check_len(x)?;
        let f = self.field();
        let nu = self.conjugate_norm(x);
        if f.is_zero(&nu) {
            return Err(Error::NotInvertible(format!("ν(x) = 0 for x = {}", self.algebra.format_element(x))));
        }
        let a = &*self.algebra;
        let inner = a.v_op(x, &a.mul(&self.s0, x), x);
        let denom = f.mul(&f.from_i64(3), &f.mul(&self.mu, &nu));
        let c = f.neg(&f.inv(&denom).expect("3μν is invertible"));
        Ok(f.vscale(&c, &a.mul(&self.s0, &inner)))
    }

    /// `V_{x,x̂} y = y` and `V_{x̂,x} y = y` on every basis `y`.
    pub fn is_conjugate_inverse_pair(&self, x: &[F::Elem], xh: &[F::Elem]) -> bool {
        let a = &*self.algebra;
        (0..a.dim()).all(|k| {
            let e = a.basis(k);
            a.v_op(x, xh, &e) == e && a.v_op(xh, x, &e) == e
        })
    }

    /// `s₀(s₀x) = (xs₀)s₀ = μx` on all basis `x`.
    pub fn check_s0_law(&self) -> CheckReport {
        let f = self.field();
        let a = &*self.algebra;
        let mut r = CheckReport::new("s0_square_law", "s0(s0 x) = (x s0)s0 = mu x", Mode::Exhaustive);
        for k in 0..a.dim() {
            let e = a.basis(k);
            let target = f.vscale(&self.mu, &e);
            let left = a.mul(&self.s0, &a.mul(&self.s0, &e));
            let right = a.mul(&a.mul(&e, &self.s0), &self.s0);
            r.record(left == target && right == target, || format!("fails on {}", a.names()[k]));
        }
        r
    }
}

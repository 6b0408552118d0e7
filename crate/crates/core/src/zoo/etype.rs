use std::sync::{Arc, OnceLock};

use super::cd::{cayley_dickson, CayleyDickson};
use super::jordan_plus;
use crate::algebra::{InvolutiveAlgebra, SkewDimOneContext};
use crate::clifford::{matched_biquaternion, symbol_index, symbol_name, CliffordContext, EKind, SYMBOLS};
use crate::error::{Error, Result};
use crate::fts::{fts_from_skew_dim_one, supplementary_pair, TripleSystem};
use crate::report::{CheckReport, Mode};
use crate::scalars::{Conjugation, Field, Matrix, Quad, QuadExt};

/// The twisted algebra `X` of type E6/E7/E8 over `K`.
///
/// An `E = K(γ)` coefficient on `v_I` is stored as two `K`-coordinates:
/// index `2p` holds the `1`-part and `2p+1` the `γ`-part of symbol `syms[p]`.
/// With `A, B ∈ {1, γ}`:
/// `Av₁⋆Bv₁ = ABv₁`, `Av₁⋆Bv_I = A^σBv_I`, `Av_I⋆Bv₁ = ABv_I`,
/// `Av_I⋆Bv_I = A^σB(v_I∘v_I)`, `Av_I⋆Bv_J = A^σB^σ(v_I∘v_J)`,
/// and the involution negates `γv₁` only.
#[derive(Clone, Debug)]
pub struct ETypeAlgebra<F: Field> {
    clifford: CliffordContext<F>,
    gamma_sq: F::Elem,
    syms: Vec<usize>,
    pos: [Option<usize>; 16],
    context: SkewDimOneContext<F>,
    fts: Arc<OnceLock<TripleSystem<F>>>,
}

pub fn e_type_algebra<F: Field>(field: F, kind: EKind, gamma_sq: F::Elem, s: &[F::Elem]) -> Result<ETypeAlgebra<F>> {
    if field.is_zero(&gamma_sq) || field.is_square(&gamma_sq) == Some(true) {
        return Err(Error::Parameter(format!("gamma^2 = {} must be a non-square", field.format(&gamma_sq))));
    }
    let clifford = CliffordContext::for_kind(field.clone(), kind, s)?;
    let syms = kind.symbols();
    let mut pos = [None; 16];
    for (p, &k) in syms.iter().enumerate() {
        pos[k] = Some(p);
    }
    let f = &field;
    let n = 2 * syms.len();
    let d = gamma_sq.clone();
    // γ^p·γ^q with a sign: returns (coefficient, γ-exponent)
    let eprod = |c: F::Elem, p: usize, q: usize| if p + q == 2 { (f.mul(&c, &d), 0) } else { (c, p + q) };
    let sigma = |g: usize| if g == 1 { f.from_i64(-1) } else { f.one() };
    let mut missing = None;
    let prod = |a: usize, b: usize| {
        let (i, j) = (syms[a / 2], syms[b / 2]);
        let (ga, gb) = (a % 2, b % 2);
        let mut v = f.zeros(n);
        let mut put = |sym: usize, g: usize, c: &F::Elem| match pos[sym] {
            Some(p) => f.add_assign(&mut v[2 * p + g], c),
            None => missing = Some(sym),
        };
        if i == 0 || j == 0 {
            let sign = if i == 0 && j != 0 { sigma(ga) } else { f.one() };
            let (c, g) = eprod(sign, ga, gb);
            put(if i == 0 { j } else { i }, g, &c);
        } else {
            let sign = if i == j { sigma(ga) } else { f.mul(&sigma(ga), &sigma(gb)) };
            let (c, g) = eprod(sign, ga, gb);
            for (k, t) in clifford.jordan_product(i, j) {
                put(k, g, &f.mul(&c, &t));
            }
        }
        v
    };
    let conj = |a: usize| {
        let mut v = f.zeros(n);
        v[a] = if a == 1 { f.from_i64(-1) } else { f.one() };
        v
    };
    let names = syms
        .iter()
        .flat_map(|&k| {
            let base = symbol_name(SYMBOLS[k]);
            [base.clone(), format!("γ{base}")]
        })
        .collect();
    let alg = InvolutiveAlgebra::from_fn(field.clone(), n, prod, conj, f.unit_vector(n, 0), names)?;
    if let Some(sym) = missing {
        return Err(Error::Construction(format!(
            "{} symbols are not closed under the product: {} appears",
            kind.name(),
            symbol_name(SYMBOLS[sym])
        )));
    }
    let mut s0 = f.zeros(n);
    s0[1] = f.from_i64(-1);
    let context = SkewDimOneContext::with_s0(Arc::new(alg), s0)?;
    Ok(ETypeAlgebra { clifford, gamma_sq, syms, pos, context, fts: Arc::new(OnceLock::new()) })
}

impl<F: Field> ETypeAlgebra<F> {
    pub fn kind(&self) -> EKind {
        self.clifford.kind()
    }

    pub fn field(&self) -> &F {
        self.clifford.field()
    }

    pub fn clifford(&self) -> &CliffordContext<F> {
        &self.clifford
    }

    pub fn context(&self) -> &SkewDimOneContext<F> {
        &self.context
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra<F> {
        self.context.algebra()
    }

    pub fn dim(&self) -> usize {
        2 * self.syms.len()
    }

    pub fn gamma_sq(&self) -> &F::Elem {
        &self.gamma_sq
    }

    /// Quotient symbols in coordinate order.
    pub fn symbols(&self) -> &[usize] {
        &self.syms
    }

    /// Coordinate of `v_w` (or `γv_w`), `w` a generator word.
    pub fn index(&self, word: &[u8], gamma: bool) -> Option<usize> {
        let p = self.pos[symbol_index(word)?]?;
        Some(2 * p + gamma as usize)
    }

    pub fn star(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        self.algebra().mul(x, y)
    }

    /// The triple system of `X` with `s₀ = −γv₁`.
    pub fn fts(&self) -> &TripleSystem<F> {
        self.fts.get_or_init(|| fts_from_skew_dim_one(&self.context))
    }

    /// Generators of `L|_K`: `v₁` followed by the family's `v_i`.
    pub fn module_generators(&self) -> Vec<usize> {
        std::iter::once(0).chain(self.kind().generators().iter().map(|&g| symbol_index(&[g]).expect("generator"))).collect()
    }

    /// `q(t₁v₁ + Σ t_g v_g) = t₁² + Σ s_g t_g²`.
    pub fn q(&self, v: &[F::Elem]) -> F::Elem {
        let f = self.field();
        let mut acc = f.square(&v[0]);
        for (t, &g) in v[1..].iter().zip(self.kind().generators()) {
            f.mul_add(&mut acc, self.clifford.s(g), &f.square(t));
        }
        acc
    }

    /// Right action of `v ∈ L|_K` by quotient Clifford multiplication. The
    /// `γ`-coordinates multiply in the quotient where `v₂v₃v₄v₅v₆ = −1`.
    pub fn module_action(&self, x: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let f = self.field();
        let gens = self.module_generators();
        if v.len() != gens.len() {
            return Err(Error::Dimension { expected: gens.len(), got: v.len() });
        }
        self.context.algebra().check_len(x)?;
        let mut out = f.zeros(self.dim());
        for (a, xa) in x.iter().enumerate() {
            if f.is_zero(xa) {
                continue;
            }
            let (k, g) = (self.syms[a / 2], a % 2);
            for (t, &w) in v.iter().zip(&gens) {
                if f.is_zero(t) {
                    continue;
                }
                let (c, m) = if g == 1 {
                    self.clifford.quotient_product_twisted(k, w)
                } else {
                    self.clifford.quotient_product(k, w)
                };
                let p = self.pos[*m].ok_or_else(|| Error::Construction("module action leaves the symbol set".into()))?;
                f.mul_add(&mut out[2 * p + g], &f.mul(xa, t), c);
            }
        }
        Ok(out)
    }

    /// Places a `K`-combination of quotient symbols (16 coordinates) on the `1`-parts.
    pub fn embed_k(&self, x16: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let f = self.field();
        let mut out = f.zeros(self.dim());
        for (k, c) in x16.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let p = self.pos[k].ok_or_else(|| Error::Precondition(format!("{} is not a symbol of this family", symbol_name(SYMBOLS[k]))))?;
            out[2 * p] = c.clone();
        }
        Ok(out)
    }

    /// Compares `⋆` on all pairs of `K`-coefficient basis elements with the
    /// Jordan product of `X|_K`.
    pub fn check_k_restriction(&self) -> CheckReport {
        let f = self.field();
        let mut r = CheckReport::new("etype_k_restriction", "star on K-coefficients = Jordan product of X|_K", Mode::Exhaustive);
        for (p, &i) in self.syms.iter().enumerate() {
            for (q, &j) in self.syms.iter().enumerate() {
                let got = self.star(&f.unit_vector(self.dim(), 2 * p), &f.unit_vector(self.dim(), 2 * q));
                let mut want = Some(f.zeros(self.dim()));
                for (k, c) in self.clifford.jordan_product(i, j) {
                    match (self.pos[k], want.as_mut()) {
                        (Some(m), Some(w)) => w[2 * m] = c,
                        _ => want = None,
                    }
                }
                r.record(want.as_ref() == Some(&got), || {
                    format!("{} ⋆ {}", symbol_name(SYMBOLS[i]), symbol_name(SYMBOLS[j]))
                });
            }
        }
        r
    }

    /// `ψ(z)` in `X` for `z ∈ Q₁⊗Q₂` (E8 only).
    pub fn psi_embed(&self, z: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.require_e8("psi_embed")?;
        let f = self.field();
        self.embed_k(&self.clifford.psi_matrix().apply(f, z))
    }

    fn require_e8(&self, what: &str) -> Result<()> {
        if self.kind() != EKind::E8 {
            return Err(Error::Precondition(format!("{what} is defined for E8 only")));
        }
        Ok(())
    }

    /// `CD((Q₁⊗Q₂)⁺, Nrd, γ²)` for the biquaternion algebra matched to the
    /// parameters, with `samples` norm-axiom samples.
    pub fn biquaternion_cd(&self, samples: usize, seed: u64) -> Result<CayleyDickson<F>> {
        self.require_e8("biquaternion_cd")?;
        let bq = matched_biquaternion(&self.clifford)?;
        let plus = Arc::new(jordan_plus(bq.algebra())?);
        let nrd = |z: &[F::Elem]| bq.nrd(z).expect("16 coordinates");
        let trace = |z: &[F::Elem], w: &[F::Elem]| bq.trace_form(z, w);
        cayley_dickson(plus, &nrd, &trace, self.gamma_sq.clone(), samples, seed)
    }

    /// `χ: X → CD`: `v_k ↦ ψ⁻¹(v_k) ⊕ 0`, `γv_k ↦ 0 ⊕ ±ψ⁻¹(v_k)` with the
    /// minus sign on `γv₁`. Column `i` is the image of basis element `i`.
    pub fn chi_matrix(&self, cd: &CayleyDickson<F>) -> Result<Matrix<F::Elem>> {
        self.require_e8("chi_matrix")?;
        let f = self.field();
        if cd.jordan().dim() != 16 || *cd.mu() != self.gamma_sq {
            return Err(Error::Precondition("CD data does not match the E8 parameters".into()));
        }
        let psi_inv = self
            .clifford
            .psi_matrix()
            .inverse(f)
            .ok_or_else(|| Error::Construction("ψ is singular".into()))?;
        let cols: Vec<Vec<F::Elem>> = (0..32)
            .map(|i| {
                let (k, g) = (self.syms[i / 2], i % 2);
                let pre = psi_inv.column(k);
                let mut v = f.zeros(32);
                if g == 0 {
                    v[..16].clone_from_slice(&pre);
                } else {
                    let sign = if k == 0 { f.from_i64(-1) } else { f.one() };
                    v[16..].clone_from_slice(&f.vscale(&sign, &pre));
                }
                v
            })
            .collect();
        Ok(Matrix::from_columns(&cols, 32))
    }

    /// `x̂ = s₀ ⋆ (xxx/6) / (−γ²ν(x))` with `ν(x) = ⟨x,xxx⟩/(12γ²)`.
    pub fn conjugate_inverse_closed(&self, x: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let f = self.field();
        let t = self.fts();
        let xxx = t.cube(x);
        let nu = f.div(&t.bform(x, &xxx), &f.mul(&f.from_i64(12), &self.gamma_sq)).expect("γ² ≠ 0");
        let denom = f.neg(&f.mul(&self.gamma_sq, &nu));
        let inv = f
            .inv(&denom)
            .ok_or_else(|| Error::NotInvertible(format!("nu(x) = 0 for x = {}", f.format_vector(x))))?;
        let sixth = f.inv(&f.from_i64(6)).expect("characteristic is not 2 or 3");
        let p = self.star(self.context.s0(), &f.vscale(&sixth, &xxx));
        Ok(f.vscale(&inv, &p))
    }
}

/// The λ = 1 witness for E8: `X` extended to `Δ = K(δ)`, `δ² = 1/γ²`, where
/// `γ` itself becomes `γ_Δ = γ²δ`.
#[derive(Clone, Debug)]
pub struct LambdaWitness<F: Field> {
    x: ETypeAlgebra<F>,
    delta: QuadExt<F>,
    ext: TripleSystem<QuadExt<F>>,
    a: Vec<F::Elem>,
    u1: Vec<Quad<F::Elem>>,
    u2: Vec<Quad<F::Elem>>,
    partitions: Vec<(u8, u8, u8, u8, u8, i8)>,
}

impl<F: Field> LambdaWitness<F> {
    /// Builds `u′₁, u′₂` from `a = −v₁/γ` with `k = δ`, and the `β_{ijkl}` signs.
    pub fn new(x: &ETypeAlgebra<F>) -> Result<Self> {
        x.require_e8("the lambda witness")?;
        let f = x.field().clone();
        let dinv = f.inv(&x.gamma_sq).expect("γ² ≠ 0");
        let delta = QuadExt::new(f.clone(), dinv.clone())?;
        let ext = x.fts().scalar_extend(&delta);
        let mut a = f.zeros(x.dim());
        a[1] = f.neg(&dinv);
        let ea: Vec<_> = a.iter().map(|c| delta.embed(c)).collect();
        let (u1, u2) = supplementary_pair(&ext, &ea, &delta.gamma())?;
        let mut partitions = Vec::new();
        let gens = [2u8, 3, 4, 5, 6];
        for &m in &gens {
            let rest: Vec<u8> = gens.iter().copied().filter(|&g| g != m).collect();
            let i = rest[0];
            for &j in &rest[1..] {
                let kl: Vec<u8> = rest.iter().copied().filter(|&g| g != i && g != j).collect();
                let beta = x.clifford.beta_sign(i, j, kl[0], kl[1])?;
                partitions.push((i, j, kl[0], kl[1], m, beta));
            }
        }
        Ok(LambdaWitness { x: x.clone(), delta, ext, a, u1, u2, partitions })
    }

    pub fn delta_field(&self) -> &QuadExt<F> {
        &self.delta
    }

    pub fn extended(&self) -> &TripleSystem<QuadExt<F>> {
        &self.ext
    }

    pub fn a(&self) -> &[F::Elem] {
        &self.a
    }

    pub fn u1(&self) -> &[Quad<F::Elem>] {
        &self.u1
    }

    pub fn u2(&self) -> &[Quad<F::Elem>] {
        &self.u2
    }

    /// The 15 splittings `{m} ∪ {i,j} ∪ {k,l}` of `{2,…,6}` with `β_{ijkl}`.
    pub fn partitions(&self) -> &[(u8, u8, u8, u8, u8, i8)] {
        &self.partitions
    }

    /// `γ_Δ = γ²δ`, the image of `γ`.
    fn gamma_delta(&self) -> Quad<F::Elem> {
        let f = self.x.field();
        self.delta.make(f.zero(), self.x.gamma_sq.clone())
    }

    /// `e = γx ⊗ 1 + x ⊗ γ`.
    pub fn e(&self, x: &[F::Elem]) -> Vec<Quad<F::Elem>> {
        let f = self.x.field();
        let d = &self.x.gamma_sq;
        let gd = self.gamma_delta();
        let mut out = Vec::with_capacity(x.len());
        for k in 0..x.len() / 2 {
            let (re, im) = (&x[2 * k], &x[2 * k + 1]);
            // γ(re + γ·im) = d·im + γ·re
            let g = [f.mul(d, im), re.clone()];
            for (h, c) in g.iter().zip([re, im]) {
                out.push(self.delta.add(&self.delta.embed(h), &self.delta.mul(&self.delta.embed(c), &gd)));
            }
        }
        out
    }

    /// `g(u′₁, eπ(e)) = ⟨u′₁, eee/6⟩`.
    pub fn witness(&self, x: &[F::Elem]) -> Result<Quad<F::Elem>> {
        self.x.algebra().check_len(x)?;
        let d = &self.delta;
        let e = self.e(x);
        let eee = self.ext.cube(&e);
        let sixth = d.inv(&d.from_i64(6)).expect("characteristic is not 2 or 3");
        Ok(d.mul(&sixth, &self.ext.bform(&self.u1, &eee)))
    }

    /// `ρ(x) = Σ β_{ijkl} t_m t_{ij} t_{kl}` over the 15 splittings, with
    /// `t_w = re + im·γ_Δ`.
    pub fn rho(&self, x: &[F::Elem]) -> Quad<F::Elem> {
        let d = &self.delta;
        let gd = self.gamma_delta();
        let t = |w: &[u8]| {
            let p = self.x.index(w, false).expect("E8 symbol");
            d.add(&d.embed(&x[p]), &d.mul(&d.embed(&x[p + 1]), &gd))
        };
        let mut acc = d.zero();
        for &(i, j, k, l, m, beta) in &self.partitions {
            let term = d.mul(&d.mul(&t(&[m]), &t(&[i, j])), &t(&[k, l]));
            let term = if beta < 0 { d.neg(&term) } else { term };
            acc = d.add(&acc, &term);
        }
        acc
    }

    /// `16γ⁴ρ(x)`.
    pub fn rho_scaled(&self, x: &[F::Elem]) -> Quad<F::Elem> {
        let f = self.x.field();
        let c = f.mul(&f.from_i64(16), &f.square(&self.x.gamma_sq));
        self.delta.mul(&self.delta.embed(&c), &self.rho(x))
    }

    /// `x = (1/2γ²)(v₂ + γv₃₄ + γv₅₆)`.
    pub fn sample_point(&self) -> Vec<F::Elem> {
        let f = self.x.field();
        let c = f.inv(&f.mul(&f.from_i64(2), &self.x.gamma_sq)).expect("γ² ≠ 0");
        let mut v = f.zeros(self.x.dim());
        for (w, g) in [(&[2u8][..], false), (&[3, 4], true), (&[5, 6], true)] {
            v[self.x.index(w, g).expect("E8 symbol")] = c.clone();
        }
        v
    }
}

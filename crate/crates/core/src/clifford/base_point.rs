use crate::algebra::InvolutiveAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{Field, Matrix};

/// Generators `v₂ … v₆` are bits 0..4 of a word mask.
pub const GENERATORS: [u8; 5] = [2, 3, 4, 5, 6];
/// The word `v₂v₃v₄v₅v₆`.
pub const OMEGA: u8 = 0b11111;

/// Quotient basis words in the order `v₁, v₂ … v₆, v₂₃, v₂₄, …, v₅₆`.
pub const SYMBOLS: [&[u8]; 16] = [
    &[],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[2, 3],
    &[2, 4],
    &[2, 5],
    &[2, 6],
    &[3, 4],
    &[3, 5],
    &[3, 6],
    &[4, 5],
    &[4, 6],
    &[5, 6],
];

pub fn word_mask(word: &[u8]) -> u8 {
    word.iter().fold(0, |m, &g| m | 1 << (g - 2))
}

pub fn mask_word(mask: u8) -> Vec<u8> {
    (0..5).filter(|i| mask >> i & 1 == 1).map(|i| GENERATORS[i]).collect()
}

pub fn symbol_name(word: &[u8]) -> String {
    if word.is_empty() {
        "v1".to_string()
    } else {
        let digits: String = word.iter().map(|g| g.to_string()).collect();
        format!("v{digits}")
    }
}

/// Index of a quotient symbol, given as a word of length ≤ 2 in increasing order.
pub fn symbol_index(word: &[u8]) -> Option<usize> {
    SYMBOLS.iter().position(|w| *w == word)
}

/// Which exceptional family a Clifford context serves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EKind {
    E6,
    E7,
    E8,
}

impl EKind {
    /// Quotient symbols carrying nonzero coordinates for this family.
    pub fn symbols(self) -> Vec<usize> {
        let words: &[&[u8]] = match self {
            EKind::E8 => &SYMBOLS,
            EKind::E7 => &[&[], &[2], &[3], &[4], &[2, 3], &[2, 4], &[3, 4], &[5, 6]],
            EKind::E6 => &[&[], &[2], &[3], &[2, 3]],
        };
        words.iter().map(|w| symbol_index(w).expect("known symbol")).collect()
    }

    /// Number of user-supplied `s` parameters.
    pub fn s_arity(self) -> usize {
        match self {
            EKind::E8 => 5,
            EKind::E7 => 3,
            EKind::E6 => 2,
        }
    }

    /// Generators `v_i` (`i ≥ 2`) spanning `L|_K` together with `v₁`.
    pub fn generators(self) -> &'static [u8] {
        match self {
            EKind::E8 => &[2, 3, 4, 5, 6],
            EKind::E7 => &[2, 3, 4],
            EKind::E6 => &[2, 3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EKind::E6 => "e6",
            EKind::E7 => "e7",
            EKind::E8 => "e8",
        }
    }
}

/// The Clifford algebra with base point `C(q_K,1)` of
/// `q_K = ⟨1, s₂, …, s₆⟩`, generated by `v₂ … v₆` with `v_i² = −s_i`,
/// together with its quotient `X|_K` by `v₂v₃v₄v₅v₆ = 1`.
#[derive(Clone, Debug)]
pub struct CliffordContext<F: Field> {
    field: F,
    kind: EKind,
    s: [F::Elem; 5],
    /// Reduced quotient products, indexed `16·I + J`.
    quotient: Vec<(F::Elem, usize)>,
    /// Products in the quotient by `v₂v₃v₄v₅v₆ = −1`.
    quotient_twisted: Vec<(F::Elem, usize)>,
}

impl<F: Field> CliffordContext<F> {
    /// `s = (s₂, …, s₆)`; for E8 the product must be exactly −1.
    pub fn new(field: F, s: [F::Elem; 5], enforce_e8: bool) -> Result<Self> {
        let f = &field;
        if s.iter().any(|x| f.is_zero(x)) {
            return Err(Error::Parameter("all s_i must be nonzero".into()));
        }
        let prod = s.iter().fold(f.one(), |acc, x| f.mul(&acc, x));
        if enforce_e8 && prod != f.from_i64(-1) {
            return Err(Error::Parameter(format!(
                "E8 parameters must satisfy s_2s_3s_4s_5s_6=-1, got product {}",
                f.format(&prod)
            )));
        }
        let mut ctx = CliffordContext { field, kind: EKind::E8, s, quotient: Vec::new(), quotient_twisted: Vec::new() };
        ctx.quotient = ctx.build_quotient(false);
        ctx.quotient_twisted = ctx.build_quotient(true);
        Ok(ctx)
    }

    /// Completes the family's parameters to five values with product −1:
    /// E7 takes `s₅ = 1`, `s₆ = −1/(s₂s₃s₄)`; E6 takes `s₄ = s₅ = 1`, `s₆ = −1/(s₂s₃)`.
    pub fn for_kind(field: F, kind: EKind, given: &[F::Elem]) -> Result<Self> {
        let f = &field;
        if given.len() != kind.s_arity() {
            return Err(Error::Parameter(format!(
                "{} needs {} s-parameters, got {}",
                kind.name(),
                kind.s_arity(),
                given.len()
            )));
        }
        if given.iter().any(|x| f.is_zero(x)) {
            return Err(Error::Parameter("all s_i must be nonzero".into()));
        }
        let mut s: Vec<F::Elem> = given.to_vec();
        while s.len() < 4 {
            s.push(f.one());
        }
        if s.len() == 4 {
            let p = s.iter().fold(f.one(), |acc, x| f.mul(&acc, x));
            s.push(f.neg(&f.inv(&p).expect("nonzero product")));
        }
        let arr: [F::Elem; 5] = s.try_into().expect("five parameters");
        let mut ctx = Self::new(field, arr, true)?;
        ctx.kind = kind;
        Ok(ctx)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn kind(&self) -> EKind {
        self.kind
    }

    /// `s_i` for `i ∈ 2..=6`.
    pub fn s(&self, i: u8) -> &F::Elem {
        &self.s[(i - 2) as usize]
    }

    pub fn s_params(&self) -> &[F::Elem; 5] {
        &self.s
    }

    /// `e_A e_B = c · e_{A xor B}` in `C(q_K,1)`.
    pub fn word_product(&self, a: u8, b: u8) -> (F::Elem, u8) {
        let f = &self.field;
        let mut swaps = 0u32;
        for i in 0..5 {
            if b >> i & 1 == 1 {
                swaps += (a >> (i + 1)).count_ones();
            }
        }
        let mut c = if swaps % 2 == 0 { f.one() } else { f.from_i64(-1) };
        for i in 0..5 {
            if a >> i & 1 == 1 && b >> i & 1 == 1 {
                c = f.mul(&c, &f.neg(&self.s[i]));
            }
        }
        (c, a ^ b)
    }

    /// Rewrites a word into the quotient basis using `ω = ±1`.
    fn reduce(&self, c: F::Elem, mask: u8, twisted: bool) -> (F::Elem, usize) {
        let f = &self.field;
        if mask.count_ones() <= 2 {
            return (c, symbol_index(&mask_word(mask)).expect("short word"));
        }
        let (c2, m2) = self.word_product(mask, OMEGA);
        let mut coef = f.mul(&c, &c2);
        if twisted {
            coef = f.neg(&coef);
        }
        (coef, symbol_index(&mask_word(m2)).expect("complement is short"))
    }

    fn build_quotient(&self, twisted: bool) -> Vec<(F::Elem, usize)> {
        let mut out = Vec::with_capacity(256);
        for i in 0..16 {
            for j in 0..16 {
                let (c, m) = self.word_product(word_mask(SYMBOLS[i]), word_mask(SYMBOLS[j]));
                out.push(self.reduce(c, m, twisted));
            }
        }
        out
    }

    /// Product of quotient symbols `I·J = c·K` in `X|_K`.
    pub fn quotient_product(&self, i: usize, j: usize) -> &(F::Elem, usize) {
        &self.quotient[i * 16 + j]
    }

    /// Product of quotient symbols when `v₂v₃v₄v₅v₆` acts as −1.
    pub fn quotient_product_twisted(&self, i: usize, j: usize) -> &(F::Elem, usize) {
        &self.quotient_twisted[i * 16 + j]
    }

    /// Jordan product `v_I ∘ v_J = ½(v_I v_J + v_J v_I)` as `(symbol, coefficient)` terms.
    pub fn jordan_product(&self, i: usize, j: usize) -> Vec<(usize, F::Elem)> {
        let f = &self.field;
        let half = f.half();
        let (c1, k1) = self.quotient_product(i, j).clone();
        let (c2, k2) = self.quotient_product(j, i).clone();
        let mut out: Vec<(usize, F::Elem)> = Vec::new();
        for (k, c) in [(k1, c1), (k2, c2)] {
            let t = f.mul(&half, &c);
            if let Some(e) = out.iter_mut().find(|(kk, _)| *kk == k) {
                f.add_assign(&mut e.1, &t);
            } else {
                out.push((k, t));
            }
        }
        out.retain(|(_, c)| !f.is_zero(c));
        out
    }

    /// The 32-dimensional `C(q_K,1)` with the reversal involution (`v_i ↦ v_i`,
    /// words reversed).
    pub fn clifford_algebra(&self) -> Result<InvolutiveAlgebra<F>> {
        let f = &self.field;
        let prod = |a: usize, b: usize| {
            let (c, m) = self.word_product(a as u8, b as u8);
            let mut v = f.zeros(32);
            v[m as usize] = c;
            v
        };
        let conj = |a: usize| {
            let k = (a as u8).count_ones();
            let mut v = f.zeros(32);
            v[a] = if (k * (k.saturating_sub(1)) / 2) % 2 == 0 { f.one() } else { f.from_i64(-1) };
            v
        };
        let names = (0..32u8).map(|m| symbol_name(&mask_word(m))).collect();
        InvolutiveAlgebra::from_fn(f.clone(), 32, prod, conj, f.unit_vector(32, 0), names)
    }

    /// Sign of the involution used on `X|_K`: word reversal composed with
    /// `v₂ ↦ −v₂`, `v₃ ↦ −v₃`. It corresponds to `bar ⊗ bar` on `Q₁ ⊗ Q₂`.
    pub fn quotient_involution_sign(&self, i: usize) -> F::Elem {
        let w = SYMBOLS[i];
        let k = w.len();
        let flips = w.iter().filter(|&&g| g == 2 || g == 3).count();
        let rev = (k * k.saturating_sub(1) / 2) % 2;
        if (rev + flips) % 2 == 0 {
            self.field.one()
        } else {
            self.field.from_i64(-1)
        }
    }

    /// `X|_K` as a 16-dimensional associative algebra with involution.
    pub fn quotient_algebra(&self) -> Result<InvolutiveAlgebra<F>> {
        let f = &self.field;
        let prod = |i: usize, j: usize| {
            let (c, k) = self.quotient_product(i, j).clone();
            let mut v = f.zeros(16);
            v[k] = c;
            v
        };
        let conj = |i: usize| {
            let mut v = f.zeros(16);
            v[i] = self.quotient_involution_sign(i);
            v
        };
        let names = SYMBOLS.iter().map(|w| symbol_name(w)).collect();
        InvolutiveAlgebra::from_fn(f.clone(), 16, prod, conj, f.unit_vector(16, 0), names)
    }

    /// `β_{ijkl}` from `v_{ij} v_{kl} = β s_i s_j s_k s_l v_m`; indices distinct in 2..=6.
    pub fn beta_sign(&self, i: u8, j: u8, k: u8, l: u8) -> Result<i8> {
        let idx = [i, j, k, l];
        if idx.iter().any(|&x| !(2..=6).contains(&x)) {
            return Err(Error::Parameter(format!("indices must lie in 2..6, got {idx:?}")));
        }
        let mut sorted = idx;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!("indices must be distinct, got {idx:?}")));
        }
        let f = &self.field;
        let bit = |g: u8| 1u8 << (g - 2);
        // v_i v_j as a signed word, then times v_k v_l
        let (c1, m1) = self.word_product(bit(i), bit(j));
        let (c2, m2) = self.word_product(bit(k), bit(l));
        let (c3, m3) = self.word_product(m1, m2);
        let (c4, sym) = self.reduce(f.mul(&f.mul(&c1, &c2), &c3), m3, false);
        let m = (2..=6u8).find(|g| !idx.contains(g)).expect("one index left");
        if SYMBOLS[sym] != [m] {
            return Err(Error::Construction(format!("v_{i}{j} v_{k}{l} does not reduce to a multiple of v_{m}")));
        }
        let ss = [i, j, k, l].iter().fold(f.one(), |acc, &g| f.mul(&acc, self.s(g)));
        let beta = f.div(&c4, &ss).expect("s-product is nonzero");
        if f.is_one(&beta) {
            Ok(1)
        } else if beta == f.from_i64(-1) {
            Ok(-1)
        } else {
            Err(Error::Construction(format!("β_{i}{j}{k}{l} = {} is not ±1", f.format(&beta))))
        }
    }

    /// Right action of `v = t₁v₁ + Σ tᵢvᵢ ∈ L|_K` on a `K`-coordinate vector of `X|_K`.
    pub fn right_action(&self, x: &[F::Elem], v: &[F::Elem; 6], twisted: bool) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = f.zeros(16);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (g, t) in v.iter().enumerate() {
                if f.is_zero(t) {
                    continue;
                }
                let (c, k) = if twisted { self.quotient_product_twisted(i, g) } else { self.quotient_product(i, g) };
                let coef = f.mul(&f.mul(xi, t), c);
                f.add_assign(&mut out[*k], &coef);
            }
        }
        out
    }

    /// `q_K(t₁v₁ + Σ tᵢvᵢ) = t₁² + Σ sᵢtᵢ²`.
    pub fn q_k(&self, v: &[F::Elem; 6]) -> F::Elem {
        let f = &self.field;
        let mut acc = f.square(&v[0]);
        for i in 0..5 {
            f.mul_add(&mut acc, &self.s[i], &f.square(&v[i + 1]));
        }
        acc
    }

    /// `v^σ = t₁v₁ − Σ tᵢvᵢ`.
    pub fn sigma(&self, v: &[F::Elem; 6]) -> [F::Elem; 6] {
        let f = &self.field;
        std::array::from_fn(|i| if i == 0 { v[0].clone() } else { f.neg(&v[i]) })
    }

    /// ψ on the tensor basis: `ψ(a⊗b) = ψ₁(a)ψ₂(b)` with `ℓ ↦ v₂`, `m ↦ v₃`,
    /// `n ↦ v₄₆`, `r ↦ v₅₆`. Column `4a + b` is the image of `a⊗b`.
    pub fn psi_matrix(&self) -> Matrix<F::Elem> {
        let f = &self.field;
        let q = self.quotient_algebra().expect("quotient algebra");
        let sym = |w: &[u8]| f.unit_vector(16, symbol_index(w).expect("symbol"));
        let l = sym(&[2]);
        let m = sym(&[3]);
        let n = sym(&[4, 6]);
        let r = sym(&[5, 6]);
        let one = sym(&[]);
        let q1 = [one.clone(), l.clone(), m.clone(), q.mul(&l, &m)];
        let q2 = [one, n.clone(), r.clone(), q.mul(&n, &r)];
        let cols: Vec<Vec<F::Elem>> = (0..16).map(|x| q.mul(&q1[x / 4], &q2[x % 4])).collect();
        Matrix::from_columns(&cols, 16)
    }

    /// ψ as a 4×4 table of single terms `(coefficient, symbol)`.
    pub fn psi_table(&self) -> Result<[[(F::Elem, usize); 4]; 4]> {
        let f = &self.field;
        let m = self.psi_matrix();
        let mut out: Vec<[(F::Elem, usize); 4]> = Vec::new();
        for a in 0..4 {
            let mut row: Vec<(F::Elem, usize)> = Vec::new();
            for b in 0..4 {
                let col = m.column(4 * a + b);
                let nz: Vec<usize> = (0..16).filter(|&k| !f.is_zero(&col[k])).collect();
                if nz.len() != 1 {
                    return Err(Error::Construction("ψ image is not a single term".into()));
                }
                row.push((col[nz[0]].clone(), nz[0]));
            }
            out.push(row.try_into().map_err(|_| Error::Construction("row".into()))?);
        }
        out.try_into().map_err(|_| Error::Construction("table".into()))
    }
}

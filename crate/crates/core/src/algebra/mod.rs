//! Unital algebras with involution given by structure constants.

mod iso;
mod serial;
mod skew;
mod structurable;

pub use iso::verify_isomorphism;
pub use serial::AlgebraJson;
pub use skew::{skew_decompose, SkewDecomposition, SkewDimOneContext};
pub use structurable::{check_structurable, StructurableMode};

use crate::error::{Error, Result};
use crate::report::{CheckReport, Mode};
use crate::scalars::{Field, Matrix};

/// Sparse coordinate list `(index, coefficient)`.
pub type Sparse<E> = Vec<(usize, E)>;

/// Finite-dimensional unital algebra with involution.
///
/// `table[i * dim + j]` expands `e_i e_j`; `conj[i]` expands `conj(e_i)`.
#[derive(Clone, Debug)]
pub struct InvolutiveAlgebra<F: Field> {
    field: F,
    dim: usize,
    table: Vec<Sparse<F::Elem>>,
    conj: Vec<Sparse<F::Elem>>,
    unit: Vec<F::Elem>,
    names: Vec<String>,
}

fn to_sparse<F: Field>(f: &F, v: Vec<F::Elem>) -> Sparse<F::Elem> {
    v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
}

impl<F: Field> InvolutiveAlgebra<F> {
    /// Builds the algebra from basis products and basis conjugates given as
    /// dense coordinate vectors. The unit is not validated here; see [`Self::validate`].
    pub fn from_fn(
        field: F,
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vec<F::Elem>,
        mut conj: impl FnMut(usize) -> Vec<F::Elem>,
        unit: Vec<F::Elem>,
        names: Vec<String>,
    ) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::Dimension { expected: dim, got: unit.len() });
        }
        if names.len() != dim {
            return Err(Error::Dimension { expected: dim, got: names.len() });
        }
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::Dimension { expected: dim, got: p.len() });
                }
                table.push(to_sparse(&field, p));
            }
        }
        let mut conj_rows = Vec::with_capacity(dim);
        for i in 0..dim {
            let c = conj(i);
            if c.len() != dim {
                return Err(Error::Dimension { expected: dim, got: c.len() });
            }
            conj_rows.push(to_sparse(&field, c));
        }
        Ok(InvolutiveAlgebra { field, dim, table, conj: conj_rows, unit, names })
    }

    /// Builds from sparse structure constants `(i, j, k, c)`: `e_i e_j` has `c` on `e_k`.
    pub fn from_sparse_constants(
        field: F,
        dim: usize,
        constants: &[(usize, usize, usize, F::Elem)],
        involution: &Matrix<F::Elem>,
        unit: Vec<F::Elem>,
        names: Vec<String>,
    ) -> Result<Self> {
        let mut dense = vec![field.zeros(dim); dim * dim];
        for (i, j, k, c) in constants {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Dimension { expected: dim, got: (*i).max(*j).max(*k) + 1 });
            }
            field.add_assign(&mut dense[i * dim + j][*k], c);
        }
        Self::from_fn(field, dim, |i, j| dense[i * dim + j].clone(), |i| involution.column(i), unit, names)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        self.field.unit_vector(self.dim, i)
    }

    /// Sparse expansion of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &Sparse<F::Elem> {
        &self.table[i * self.dim + j]
    }

    pub fn basis_conj(&self, i: usize) -> &Sparse<F::Elem> {
        &self.conj[i]
    }

    pub fn check_len(&self, x: &[F::Elem]) -> Result<()> {
        if x.len() == self.dim {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.dim, got: x.len() })
        }
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(x.len(), self.dim, "left factor has wrong dimension");
        assert_eq!(y.len(), self.dim, "right factor has wrong dimension");
        let f = &self.field;
        let mut out = f.zeros(self.dim);
        let ys: Vec<usize> = (0..self.dim).filter(|&j| !f.is_zero(&y[j])).collect();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for &j in &ys {
                let c = f.mul(xi, &y[j]);
                for (k, t) in &self.table[i * self.dim + j] {
                    f.mul_add(&mut out[*k], &c, t);
                }
            }
        }
        out
    }

    /// Product with the loops in the opposite order; an independent evaluation path.
    pub fn mul_transposed(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = f.zeros(self.dim);
        for j in (0..self.dim).rev() {
            if f.is_zero(&y[j]) {
                continue;
            }
            for i in (0..self.dim).rev() {
                if f.is_zero(&x[i]) {
                    continue;
                }
                for (k, t) in &self.table[i * self.dim + j] {
                    let c = f.mul(t, &f.mul(&y[j], &x[i]));
                    f.add_assign(&mut out[*k], &c);
                }
            }
        }
        out
    }

    pub fn conj(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = f.zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (k, t) in &self.conj[i] {
                f.mul_add(&mut out[*k], xi, t);
            }
        }
        out
    }

    /// `V_{x,y} z = {x,y,z} = (x ȳ) z + (z ȳ) x − (z x̄) y`.
    pub fn v_op(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        let yb = self.conj(y);
        let xb = self.conj(x);
        let a = self.mul(&self.mul(x, &yb), z);
        let b = self.mul(&self.mul(z, &yb), x);
        let c = self.mul(&self.mul(z, &xb), y);
        let f = &self.field;
        f.vsub(&f.vadd(&a, &b), &c)
    }

    /// `U_{x,y} z = V_{x,z} y`.
    pub fn u_op(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        self.v_op(x, z, y)
    }

    /// Matrix of `V_{x,y}` (column `k` is `V_{x,y} e_k`).
    pub fn v_matrix(&self, x: &[F::Elem], y: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|k| self.v_op(x, y, &self.basis(k))).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|k| self.mul(x, &self.basis(k))).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    pub fn involution_matrix(&self) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|k| self.conj(&self.basis(k))).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// If `v = c·1`, returns `c`.
    pub fn scalar_part(&self, v: &[F::Elem]) -> Option<F::Elem> {
        let f = &self.field;
        let idx = self.unit.iter().position(|u| !f.is_zero(u))?;
        let c = f.div(&v[idx], &self.unit[idx])?;
        if f.vsub(v, &f.vscale(&c, &self.unit)).iter().all(|t| f.is_zero(t)) {
            Some(c)
        } else {
            None
        }
    }

    /// Reads `c` off `v = c·1` without checking the other coordinates.
    pub(crate) fn unit_coefficient(&self, v: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let idx = self.unit.iter().position(|u| !f.is_zero(u)).expect("unit is nonzero");
        f.div(&v[idx], &self.unit[idx]).expect("unit coordinate is invertible")
    }

    /// Checks the unit law, that the involution has order 2, and that it is
    /// anti-multiplicative, on all basis elements and pairs.
    pub fn validate(&self) -> CheckReport {
        let f = &self.field;
        let mut r = CheckReport::new("algebra_well_formed", "1x = x1 = x, conj(conj x) = x, conj(xy) = conj(y)conj(x)", Mode::Exhaustive);
        for i in 0..self.dim {
            let e = self.basis(i);
            r.record(self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e, || format!("unit law fails on {}", self.names[i]));
            r.record(self.conj(&self.conj(&e)) == e, || format!("involution not of order 2 on {}", self.names[i]));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let (ei, ej) = (self.basis(i), self.basis(j));
                let lhs = self.conj(&self.mul(&ei, &ej));
                let rhs = self.mul(&self.conj(&ej), &self.conj(&ei));
                r.record(lhs == rhs, || {
                    format!("conj({}·{}) = {} but conj·conj = {}", self.names[i], self.names[j], f.format_vector(&lhs), f.format_vector(&rhs))
                });
            }
        }
        r
    }

    /// Associativity on all basis triples.
    pub fn is_associative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                (0..self.dim).all(|k| {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
                })
            })
        })
    }

    /// Reads the structure constants over another field through a coefficient map.
    pub fn map_field<G: Field>(&self, g: G, map: impl Fn(&F::Elem) -> G::Elem) -> InvolutiveAlgebra<G> {
        InvolutiveAlgebra {
            dim: self.dim,
            table: self.table.iter().map(|s| s.iter().map(|(k, c)| (*k, map(c))).collect()).collect(),
            conj: self.conj.iter().map(|s| s.iter().map(|(k, c)| (*k, map(c))).collect()).collect(),
            unit: self.unit.iter().map(&map).collect(),
            names: self.names.clone(),
            field: g,
        }
    }

    /// Returns a copy with one structure constant replaced (used for mutation tests).
    pub fn with_constant(&self, i: usize, j: usize, k: usize, c: F::Elem) -> Self {
        let mut out = self.clone();
        let entry = &mut out.table[i * self.dim + j];
        entry.retain(|(idx, _)| *idx != k);
        if !self.field.is_zero(&c) {
            entry.push((k, c));
            entry.sort_by_key(|(idx, _)| *idx);
        }
        out
    }

    pub fn format_element(&self, x: &[F::Elem]) -> String {
        let f = &self.field;
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| format!("({})·{}", f.format(c), self.names[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Multiplication table as CSV: header of basis symbols, then for each
    /// ordered basis pair the product coordinates.
    pub fn to_csv(&self) -> String {
        let f = &self.field;
        let mut out = String::new();
        out.push_str("row,col");
        for n in &self.names {
            out.push(',');
            out.push_str(n);
        }
        out.push('\n');
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut coords = f.zeros(self.dim);
                for (k, c) in self.basis_product(i, j) {
                    coords[*k] = c.clone();
                }
                out.push_str(&self.names[i]);
                out.push(',');
                out.push_str(&self.names[j]);
                for c in &coords {
                    out.push(',');
                    out.push_str(&f.format(c));
                }
                out.push('\n');
            }
        }
        out
    }
}

//! Freudenthal triple systems: a symmetric trilinear product `xyz` and a skew
//! form `⟨x,y⟩` on a finite-dimensional space.

mod checks;
mod serial;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

pub use checks::{
    check_fts_axioms, detect_multiplier, is_simple, is_strictly_regular, quartic, supplementary_pair, verify_similarity,
};
pub use serial::FtsJson;

use crate::algebra::{SkewDimOneContext, Sparse};
use crate::scalars::{Conjugation, Field, Matrix};

/// A source of the triple product and bilinear form.
pub trait TripleProduct<F: Field>: Send + Sync {
    fn field(&self) -> &F;
    fn dim(&self) -> usize;
    fn triple(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem>;
    fn bform(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem;
}

impl<F: Field> TripleProduct<F> for SkewDimOneContext<F> {
    fn field(&self) -> &F {
        SkewDimOneContext::field(self)
    }

    fn dim(&self) -> usize {
        SkewDimOneContext::dim(self)
    }

    fn triple(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        SkewDimOneContext::triple(self, x, y, z)
    }

    fn bform(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        SkewDimOneContext::bform(self, x, y)
    }
}

type TripleFn<E> = dyn Fn(&[E], &[E], &[E]) -> Vec<E> + Send + Sync;
type FormFn<E> = dyn Fn(&[E], &[E]) -> E + Send + Sync;

/// Triple product given by closures.
pub struct FnTriple<F: Field> {
    field: F,
    dim: usize,
    triple: Box<TripleFn<F::Elem>>,
    bform: Box<FormFn<F::Elem>>,
}

impl<F: Field> FnTriple<F> {
    pub fn new(
        field: F,
        dim: usize,
        triple: impl Fn(&[F::Elem], &[F::Elem], &[F::Elem]) -> Vec<F::Elem> + Send + Sync + 'static,
        bform: impl Fn(&[F::Elem], &[F::Elem]) -> F::Elem + Send + Sync + 'static,
    ) -> Self {
        FnTriple { field, dim, triple: Box::new(triple), bform: Box::new(bform) }
    }
}

impl<F: Field> TripleProduct<F> for FnTriple<F> {
    fn field(&self) -> &F {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn triple(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        (self.triple)(x, y, z)
    }

    fn bform(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        (self.bform)(x, y)
    }
}

/// Basis-triple table `t(e_i,e_j,e_k)` stored once per sorted index triple.
#[derive(Clone, Debug)]
pub struct TripleTable<E> {
    dim: usize,
    /// `index[(i·n + j)·n + k]` points into `entries`.
    index: Vec<u32>,
    entries: Vec<Sparse<E>>,
    keys: Vec<(usize, usize, usize)>,
}

impl<E> TripleTable<E> {
    fn from_entries(dim: usize, keys: Vec<(usize, usize, usize)>, entries: Vec<Sparse<E>>) -> Self {
        let mut index = vec![0u32; dim * dim * dim];
        for (pos, &(i, j, k)) in keys.iter().enumerate() {
            for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                index[(a * dim + b) * dim + c] = pos as u32;
            }
        }
        TripleTable { dim, index, entries, keys }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Sparse<E> {
        &self.entries[self.index[(i * self.dim + j) * self.dim + k] as usize]
    }

    /// Sorted index triples `i ≤ j ≤ k` with their entries.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Sparse<E>)> {
        self.keys.iter().zip(&self.entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn map<G>(&self, g: impl Fn(&E) -> G) -> TripleTable<G> {
        TripleTable {
            dim: self.dim,
            index: self.index.clone(),
            entries: self.entries.iter().map(|e| e.iter().map(|(k, c)| (*k, g(c))).collect()).collect(),
            keys: self.keys.clone(),
        }
    }
}

pub(crate) fn sorted_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Contracts a basis table against three coordinate vectors.
fn contract<F: Field>(f: &F, table: &TripleTable<F::Elem>, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
    let n = table.dim;
    let nz = |v: &[F::Elem]| -> Vec<usize> { (0..n).filter(|&i| !f.is_zero(&v[i])).collect() };
    let (xs, ys, zs) = (nz(x), nz(y), nz(z));
    let mut out = f.zeros(n);
    for &i in &xs {
        for &j in &ys {
            let xy = f.mul(&x[i], &y[j]);
            for &k in &zs {
                let entry = table.get(i, j, k);
                if entry.is_empty() {
                    continue;
                }
                let c = f.mul(&xy, &z[k]);
                for (m, t) in entry {
                    f.mul_add(&mut out[*m], &c, t);
                }
            }
        }
    }
    out
}

/// Triple product read from a basis table, used after scalar extension.
struct TableTriple<F: Field> {
    field: F,
    table: Arc<TripleTable<F::Elem>>,
    gram: Matrix<F::Elem>,
}

impl<F: Field> TripleProduct<F> for TableTriple<F> {
    fn field(&self) -> &F {
        &self.field
    }

    fn dim(&self) -> usize {
        self.table.dim
    }

    fn triple(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        contract(&self.field, &self.table, x, y, z)
    }

    fn bform(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        gram_form(&self.field, &self.gram, x, y)
    }
}

fn gram_form<F: Field>(f: &F, g: &Matrix<F::Elem>, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for (i, xi) in x.iter().enumerate() {
        if f.is_zero(xi) {
            continue;
        }
        let row = f.dot(g.row(i), y);
        f.mul_add(&mut acc, xi, &row);
    }
    acc
}

/// A triple system: a product source, its Gram matrix, and a lazily built
/// basis-triple table shared between threads.
#[derive(Clone)]
pub struct TripleSystem<F: Field> {
    field: F,
    source: Arc<dyn TripleProduct<F>>,
    gram: Matrix<F::Elem>,
    table: Arc<OnceLock<Arc<TripleTable<F::Elem>>>>,
}

impl<F: Field> fmt::Debug for TripleSystem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleSystem").field("field", &self.field.name()).field("dim", &self.dim()).finish()
    }
}

impl<F: Field> TripleSystem<F> {
    pub fn new(source: Arc<dyn TripleProduct<F>>) -> Self {
        let field = source.field().clone();
        let n = source.dim();
        let rows: Vec<Vec<F::Elem>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let ei = field.unit_vector(n, i);
                (0..n).map(|j| source.bform(&ei, &field.unit_vector(n, j))).collect()
            })
            .collect();
        TripleSystem { field, source, gram: Matrix::from_rows(rows), table: Arc::new(OnceLock::new()) }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn source(&self) -> &Arc<dyn TripleProduct<F>> {
        &self.source
    }

    /// `G[i][j] = ⟨e_i, e_j⟩`.
    pub fn gram(&self) -> &Matrix<F::Elem> {
        &self.gram
    }

    pub fn triple(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        self.source.triple(x, y, z)
    }

    pub fn bform(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        gram_form(&self.field, &self.gram, x, y)
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        self.field.unit_vector(self.dim(), i)
    }

    /// The basis-triple table, computed on first use from sorted index triples.
    pub fn table(&self) -> &TripleTable<F::Elem> {
        self.table.get_or_init(|| {
            let n = self.dim();
            let f = &self.field;
            let keys = sorted_triples(n);
            let entries: Vec<Sparse<F::Elem>> = keys
                .par_iter()
                .map(|&(i, j, k)| {
                    let v = self.source.triple(&self.basis(i), &self.basis(j), &self.basis(k));
                    v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
                })
                .collect();
            Arc::new(TripleTable::from_entries(n, keys, entries))
        })
    }

    /// `t(x,y,z)` evaluated through the basis table.
    pub fn triple_from_table(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        contract(&self.field, self.table(), x, y, z)
    }

    /// `xxx` through the table, summing each sorted index triple once with its
    /// multiplicity.
    pub fn cube(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let (three, six) = (f.from_i64(3), f.from_i64(6));
        let mut out = f.zeros(n);
        for (&(i, j, k), entry) in self.table().iter() {
            if entry.is_empty() || f.is_zero(&x[i]) || f.is_zero(&x[j]) || f.is_zero(&x[k]) {
                continue;
            }
            let mut c = f.mul(&f.mul(&x[i], &x[j]), &x[k]);
            if i != j && j != k {
                c = f.mul(&c, &six);
            } else if i != j || j != k {
                c = f.mul(&c, &three);
            }
            for (m, t) in entry {
                f.mul_add(&mut out[*m], &c, t);
            }
        }
        out
    }

    /// The same structure constants read over a quadratic extension `E` of the base field.
    pub fn scalar_extend<E>(&self, ext: &E) -> TripleSystem<E>
    where
        E: Conjugation<Base = F>,
    {
        let table = Arc::new(self.table().map(|c| ext.embed(c)));
        let gram = self.gram.map::<E>(|c| ext.embed(c));
        let source = TableTriple { field: ext.clone(), table: Arc::clone(&table), gram: gram.clone() };
        let cell = OnceLock::new();
        let _ = cell.set(table);
        TripleSystem { field: ext.clone(), source: Arc::new(source), gram, table: Arc::new(cell) }
    }

    /// The same system with the triple product scaled by `c` and the form kept.
    pub fn with_scaled_triple(&self, c: F::Elem) -> TripleSystem<F> {
        let src = Arc::clone(&self.source);
        let src2 = Arc::clone(&self.source);
        let f = self.field.clone();
        let triple = move |x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]| f.vscale(&c, &src.triple(x, y, z));
        let bform = move |x: &[F::Elem], y: &[F::Elem]| src2.bform(x, y);
        TripleSystem::new(Arc::new(FnTriple::new(self.field.clone(), self.dim(), triple, bform)))
    }
}

/// The triple system of a skew-dimension-one structurable algebra:
/// `⟨x,y⟩1 = (x ȳ − y x̄)s₀`, `yzw = 2{y,s₀z,w} − ⟨z,w⟩y − ⟨z,y⟩w − ⟨y,w⟩z`.
pub fn fts_from_skew_dim_one<F: Field>(ctx: &SkewDimOneContext<F>) -> TripleSystem<F> {
    TripleSystem::new(Arc::new(ctx.clone()))
}

#[cfg(test)]
mod tests;

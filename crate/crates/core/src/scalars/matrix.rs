use super::field::Field;

/// Dense row-major matrix over a field's element type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<E>], rows: usize) -> Self {
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zero<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let idx = i * out.cols + j;
                        f.mul_add(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|i| f.dot(self.row(i), v)).collect()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref<F: Field<Elem = E>>(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..self.cols {
                    let t = f.mul(&factor, self.get(r, j));
                    let v = f.sub(self.get(i, j), &t);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.clone().rref(f).len()
    }

    /// Solves `self · x = b`; `None` when the system is inconsistent.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &[E]) -> Option<Vec<E>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = f.zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    /// Basis of the right kernel `{x : self · x = 0}`.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = f.zeros(self.cols);
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Determinant by elimination (requires a field).
    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("pivot is nonzero");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let t = f.mul(&factor, m.get(c, j));
                    let v = f.sub(m.get(i, j), &t);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Determinant by cofactor expansion; division-free, so valid over
    /// commutative rings with zero divisors. Intended for small sizes.
    pub fn det_expansion<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let cols: Vec<usize> = (0..self.cols).collect();
        self.minor_det(f, 0, &cols)
    }

    fn minor_det<F: Field<Elem = E>>(&self, f: &F, row: usize, cols: &[usize]) -> E {
        if cols.is_empty() {
            return f.one();
        }
        let mut acc = f.zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if f.is_zero(a) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = f.mul(a, &self.minor_det(f, row + 1, &rest));
            if k % 2 == 0 {
                f.add_assign(&mut acc, &term);
            } else {
                f.sub_assign(&mut acc, &term);
            }
        }
        acc
    }

    pub fn map<F: Field>(&self, g: impl Fn(&E) -> F::Elem) -> Matrix<F::Elem> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect() }
    }

    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| f.format(x)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, PrimeField, Rationals};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_ranks() {
        let q = Rationals;
        assert_eq!(Matrix::identity(&q, 4).rank(&q), 4);
        assert_eq!(Matrix::zero(&q, 3, 3).rank(&q), 0);
    }

    #[test]
    fn rank_independent_of_row_order() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..50 {
            let mut rows: Vec<Vec<u64>> = (0..8).map(|_| f.random_vector(&mut rng, 8, 0)).collect();
            // force rank deficiency on some trials
            if trial % 3 == 0 {
                rows[7] = f.vadd(&rows[0], &f.vscale(&5, &rows[1]));
            }
            let a = Matrix::from_rows(rows.clone()).rank(&f);
            rows.shuffle(&mut rng);
            let b = Matrix::from_rows(rows.clone()).rank(&f);
            // column elimination on the transpose is a second, independent order
            let c = Matrix::from_rows(rows).transpose().rank(&f);
            assert_eq!(a, b);
            assert_eq!(a, c);
            if trial % 3 == 0 {
                assert!(a <= 7);
            }
        }
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let m = Matrix::from_fn(5, 5, |_, _| q.random(&mut rng, 9));
            if let Some(inv) = m.inverse(&q) {
                assert_eq!(inv.mul(&q, &m), Matrix::identity(&q, 5));
                assert!(!q.is_zero(&m.det(&q)));
            } else {
                assert!(q.is_zero(&m.det(&q)));
            }
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        let q = Rationals;
        let m = Matrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]]);
        let x = m.solve(&q, &[rat(3, 1), rat(6, 1)]).unwrap();
        assert_eq!(m.apply(&q, &x), vec![rat(3, 1), rat(6, 1)]);
        assert!(m.solve(&q, &[rat(3, 1), rat(7, 1)]).is_none());
        let k = m.kernel(&q);
        assert_eq!(k.len(), 1);
        assert!(q.vis_zero(&m.apply(&q, &k[0])));
    }

    #[test]
    fn determinants_agree() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m = Matrix::from_fn(4, 4, |_, _| q.random(&mut rng, 5));
            assert_eq!(m.det(&q), m.det_expansion(&q));
        }
    }
}

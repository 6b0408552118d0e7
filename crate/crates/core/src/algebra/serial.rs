use serde::{Deserialize, Serialize};

use super::InvolutiveAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{Field, Matrix};

/// JSON form of an algebra: scalars as strings, structure constants sparse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    /// Row-major: `involution[i][j]` is the coefficient of `e_i` in `conj(e_j)`.
    pub involution: Vec<Vec<String>>,
    /// `(i, j, k, c)`: `e_i e_j` has coefficient `c` on `e_k`.
    pub structure_constants: Vec<(usize, usize, usize, String)>,
}

impl<F: Field> InvolutiveAlgebra<F> {
    pub fn to_json(&self) -> AlgebraJson {
        let f = self.field();
        let mut constants = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, c) in self.basis_product(i, j) {
                    constants.push((i, j, *k, f.format(c)));
                }
            }
        }
        AlgebraJson {
            field: f.name(),
            dim: self.dim(),
            basis: self.names().to_vec(),
            unit: self.unit().iter().map(|c| f.format(c)).collect(),
            involution: self.involution_matrix().format(f),
            structure_constants: constants,
        }
    }

    pub fn from_json(field: F, json: &AlgebraJson) -> Result<Self> {
        let n = json.dim;
        let parse = |s: &String| field.parse(s);
        let unit = json.unit.iter().map(parse).collect::<Result<Vec<_>>>()?;
        if json.involution.len() != n {
            return Err(Error::Dimension { expected: n, got: json.involution.len() });
        }
        let rows = json
            .involution
            .iter()
            .map(|row| row.iter().map(parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("involution matrix is not square".into()));
        }
        let inv = Matrix::from_rows(rows);
        let constants = json
            .structure_constants
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, field.parse(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sparse_constants(field.clone(), n, &constants, &inv, unit, json.basis.clone())
    }
}

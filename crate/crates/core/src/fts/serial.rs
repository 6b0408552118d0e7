use serde::{Deserialize, Serialize};

use super::TripleSystem;
use crate::scalars::Field;

/// JSON dump: the Gram matrix and the basis-triple table over sorted index
/// triples `i ≤ j ≤ k` (the other orderings follow by symmetry).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FtsJson {
    pub field: String,
    pub dim: usize,
    pub bform: Vec<Vec<String>>,
    pub triples: Vec<(usize, usize, usize, Vec<(usize, String)>)>,
}

impl<F: Field> TripleSystem<F> {
    pub fn to_json(&self) -> FtsJson {
        let f = self.field();
        let triples = self
            .table()
            .iter()
            .filter(|(_, e)| !e.is_empty())
            .map(|(&(i, j, k), e)| (i, j, k, e.iter().map(|(m, c)| (*m, f.format(c))).collect()))
            .collect();
        FtsJson { field: f.name(), dim: self.dim(), bform: self.gram().format(f), triples }
    }
}

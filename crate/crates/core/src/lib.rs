//! Exact constructions of quadrangular algebras, Freudenthal triple systems
//! and structurable algebras, with zero-tolerance identity checks.

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod fts;
pub mod quadrangular;
pub mod report;
pub mod scalars;
pub mod zoo;

pub use algebra::{InvolutiveAlgebra, SkewDimOneContext};
pub use error::{Error, Result};
pub use report::{CheckReport, Mode};
pub use scalars::{Field, Matrix, PrimeField, QuadExt, Rationals};

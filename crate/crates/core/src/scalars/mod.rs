//! Exact scalar fields and dense linear algebra.

mod field;
mod matrix;
mod prime;
mod quadratic;
mod rational;

pub use field::{Conjugation, Field};
pub use matrix::Matrix;
pub use prime::PrimeField;
pub use quadratic::{Quad, QuadExt};
pub use rational::{is_sum_of_two_squares, rat, Rational, Rationals};

/// Tower used to split a biquaternion algebra: `K(√a₁)(√a₂)`.
pub type Tower<F> = QuadExt<QuadExt<F>>;

#[cfg(test)]
mod tests;

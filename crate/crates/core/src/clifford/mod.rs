//! Quaternion and biquaternion algebras, the Clifford algebra with base point
//! and its 16-dimensional central quotient.

mod base_point;
mod quaternion;

pub use base_point::{mask_word, symbol_index, symbol_name, word_mask, CliffordContext, EKind, GENERATORS, OMEGA, SYMBOLS};
pub use quaternion::{quaternion_algebra, quaternion_nrd, quaternion_trd, tensor_with_involution, Biquaternion};

use crate::error::Result;
use crate::scalars::Field;

/// The biquaternion algebra `(−s₂,−s₃) ⊗ (−s₄s₆,−s₅s₆)` matched to a Clifford context.
pub fn matched_biquaternion<F: Field>(ctx: &CliffordContext<F>) -> Result<Biquaternion<F>> {
    let f = ctx.field();
    let s = |i| ctx.s(i).clone();
    Biquaternion::new(
        f,
        f.neg(&s(2)),
        f.neg(&s(3)),
        f.neg(&f.mul(&s(4), &s(6))),
        f.neg(&f.mul(&s(5), &s(6))),
    )
}

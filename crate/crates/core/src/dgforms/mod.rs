//! Graded-commutative algebras of polynomial differential forms on
//! `Δ^l × (base chart)`, with matrices over them and Chern–Weil theory.

mod context;
mod form;
mod invariant;

pub use context::{Ctx, DGContext};
pub use form::DiffForm;
#[allow(unused_imports)]
pub(crate) use form::{below, bits, merge_sign};
pub use invariant::{
    chern_character, invariant_eval, matrix_curvature, matrix_d, polarize, total_invariant,
    transgression, FormMatrix, InvariantPolynomial,
};

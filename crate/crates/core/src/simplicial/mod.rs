//! The simplex category, forms on standard simplices, simplex integration,
//! normalized cochains and the comparison map `ρ`.

mod cochains;
mod delta;
mod forms;
mod sset;

pub use cochains::{aw_product, coboundary, coboundary_matrix, rho, Cochain};
pub use delta::DeltaMorphism;
pub use forms::{
    cosimplicial_images, dirichlet, fiber_integral, integrate_over_simplex, pullback_along,
    pullback_simplex, simplex_context_like, SimplexForms,
};
pub use sset::FiniteSimplicialSet;

//! Adelic Chern–Weil computations: exact forms on simplices, Sullivan
//! forms on simplicial sets, adelic connections on chains of points, and
//! Grothendieck residues for Bott-type localization.

pub mod error;
pub mod adelic;
pub mod dgforms;
pub mod exactalg;
pub mod residues;
pub mod scenarios;
pub mod simplicial;
pub mod sullivan;

pub use error::{Error, Result};

//! Per-chain adelic models: chain algebras, frames, Bott-glued connections,
//! Chern form components and the localization identities.

pub mod chain;
pub mod connection;
pub mod localization;

pub use chain::{AdelicFrame, Chain, ChainAlgebra, DEFAULT_CHAIN_PRECISION};
pub use connection::{
    chern_form_component, chern_weil_component, curvature_11, independence_check, invert_functions,
    mixed_connection, whitney_check, ChainConnection, IndependenceCheck, WhitneyReport,
};
pub use localization::{
    eta_top, l_matrix, localization_check, pairing, pairing_defects, projector, ChartPoint,
    LocalizationData, LocalizationReport,
};

//! Grothendieck residues of generalized fractions and the Bott local
//! invariants built from them.

pub mod fraction;
pub mod local;

pub use fraction::{
    membership_matrix, membership_precision, residue_at, residue_general, residue_general_with,
    residue_monomial, GeneralizedFraction, ResidueOptions, DEFAULT_MEMBERSHIP_CAP,
};
pub use local::{
    change_coordinates, coordinate_change_check, gauss_bonnet_local, invariant_fraction, local_invariant,
    simple_zero_invariant, working_precision, CoordinateChange, LocalZeroData,
};

//! Characters and Poincaré machinery for the supported reflection groups.

mod characters;
mod partition;
mod poincare;

pub use characters::{character_sn, character_table, CharacterTable, Irrep, IrrepLabel};
pub use partition::{BoxHook, YoungDiagram};
pub use poincare::{
    d_minus, d_plus, degree_shift, det_one_minus_gt, dihedral_ph0, dual_label, kirillov_ph0,
    molien_ps, ph0, pi_m, poincare_hm, poincare_hm_total, prop42_d, solomon_d, top_degree,
    PoincarePoly,
};

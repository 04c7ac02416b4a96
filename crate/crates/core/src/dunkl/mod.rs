//! Dunkl operators, the commuting higher-order generator family, the
//! m-harmonicity verifier, and the direct kernel construction of the graded
//! module of generalized harmonics.

mod context;
mod direct;
mod family;
mod graded;
mod sn_engine;

pub use context::{verify_m_harmonic, DunklContext, HarmonicityCertificate, RationalFunction};
pub use direct::construct_hm_direct;
pub use family::{validated_family, DirectionFamily, RankCheck};
pub use graded::{
    regular_character_check, spans_agree_per_degree, GradedBasis, GradedEntry, Provenance,
};

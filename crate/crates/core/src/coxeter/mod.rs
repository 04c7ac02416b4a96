//! Supported Coxeter groups: the symmetric groups A_{n-1} = S_n acting on
//! all of C^n, and the dihedral groups I2(N) in complex coordinates over
//! Q(zeta_2N). Other types are rejected at the gate; the construction is
//! data-driven so further families can slot in behind `GroupName`.

mod group;

pub use group::{
    build_group, parse_group_name, ConjugacyClass, GroupData, GroupElement, GroupName,
    Multiplicity, Root,
};
pub(crate) use group::cycle_type as group_cycle_type;

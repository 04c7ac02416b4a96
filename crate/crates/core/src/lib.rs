//! Exact invariant theory of finite Coxeter groups.
//!
//! The library constructs the graded space of generalized harmonic
//! polynomials attached to a Coxeter group and an integer multiplicity
//! function on its reflection classes, by two independent routes:
//!
//! * directly, as the joint polynomial kernel of the commuting
//!   difference-differential operator family built from Dunkl operators
//!   ([`dunkl`]);
//! * through the degenerate Knizhnik–Zamolodchikov system with values in
//!   the coinvariant module, composed with the Matsuo–Cherednik map
//!   ([`kz`]).
//!
//! Character-theoretic predictions for the degrees (Poincaré polynomials,
//! Solomon-type exponent formulas, dihedral and symmetric-group closed
//! forms) live in [`reptheory`]; symmetric-group closed-form lowest-degree
//! solutions and Plancherel-measure degree statistics in [`snspecial`].
//!
//! All computations are exact: scalars are rationals or elements of a
//! cyclotomic field, and every emitted basis is certified by exact
//! substitution into the defining identities.

pub mod coxeter;
pub mod dunkl;
pub mod exactalg;
pub mod harmonics;
pub mod kz;
pub mod polyops;
pub mod reptheory;
pub mod snspecial;

pub use coxeter::{build_group, GroupData, GroupName, Multiplicity};
pub use exactalg::{ExactError, Scalar};
pub use polyops::MultiPoly;

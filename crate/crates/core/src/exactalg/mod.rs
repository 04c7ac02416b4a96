//! Exact scalar fields and exact linear algebra.
//!
//! Scalars are either rationals or elements of a cyclotomic field
//! `Q(zeta_k)`, stored as reduced coordinate vectors with respect to the
//! power basis of `Q[x]/Phi_k(x)`. Matrices over these scalars support
//! deterministic reduced row echelon form, kernel and solve. A separate
//! modular engine (kernel mod a word-size prime, CRT lifting, rational
//! reconstruction) accelerates large rational kernels; its output is always
//! certified exactly by the callers.

mod cyclotomic;
mod matrix;
pub mod modular;
mod scalar;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycloField};
pub use matrix::{Mat, PreparedSolve, Rref};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("field mismatch: cyclotomic orders {0} and {1} cannot be combined")]
    FieldMismatch(u32, u32),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

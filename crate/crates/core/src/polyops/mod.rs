//! Sparse multivariate polynomial arithmetic and operator calculus.

mod calculus;
mod monomial;
mod poly;
mod ratop;
mod uni;

pub use calculus::{apply_diffop, divided_difference, integrate_t, pairing, BilinearForm};
pub use monomial::{monomials_of_degree, Mono};
pub use poly::MultiPoly;
pub use ratop::RatDiffOp;
pub use uni::{RatFun, UniPoly};

//! Exact rational and univariate-polynomial arithmetic.
//!
//! This crate is the coefficient domain for the whole workspace: arbitrary
//! precision rationals, dense univariate polynomials over them (in the
//! indeterminate `t` or `x`), affine exponent expressions `a·t + b`, and the
//! structured claim-report types every verification suite emits.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod poly;
pub mod rational;
pub mod report;

pub use poly::{AffineExponent, PolyError, Proportionality, UniPoly, Var};
pub use rational::Q;
pub use report::{ClaimReport, ClaimStatus};

//! Exact truncated `q`-expansions of orbifold characters and the linear
//! algebra over them.
//!
//! The crate provides four layers:
//!
//! * [`series`] — the [`QSeries`] arithmetic kernel: exact rational
//!   coefficients, fractional exponent lattices with automatic common-
//!   denominator rescaling, and validity-order tracking through products;
//! * [`basis`] — eta inverses, theta constants `Θ_{j,k}` and derivatives
//!   `∂Θ_{j,k}`, and irreducible Virasoro characters;
//! * [`characters`] — the orbifold module characters (`Λ(i)₀^±`, coset
//!   sums, Fock splittings) and the Virasoro multiplicity sum;
//! * [`checks`] / [`rank`] — identity verdicts with first-difference
//!   witnesses, and exact Gaussian rank computations for the
//!   modular-closure spanning families.
//!
//! Every comparison is exact: two series are judged equal only if all terms
//! below the stated order agree as rational numbers.

pub mod basis;
pub mod characters;
pub mod checks;
pub mod rank;
pub mod series;

pub use basis::{chl, chl_with, dtheta, eta_inv, prod_inv, prod_one_minus, theta};
pub use characters::{
    c_star, coset_character, fock_character, lambda0_pm_characters, m1_split_characters,
    virasoro_plus_sum,
};
pub use checks::{
    character_checks, fock_split_check, theta_identity_check, CharacterChecks,
    ThetaIdentityCheck,
};
pub use rank::{
    closure_family, d2_span_dims, expected_closure_rank, modular_closure_rank, rank_of,
};
pub use series::{QSeries, TauQSeries};

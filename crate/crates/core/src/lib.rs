//! Exact Clebsch–Gordan coefficients.
//!
//! Three independent routes compute the same coefficients:
//!
//! - [`formulas::cg_alternative`], a single-sum closed form over binomials
//!   obtained by rebuilding every multiplet with raising operators;
//! - [`formulas::cg_racah`], Racah's classical formula;
//! - [`ladder`], which constructs the `|J, M⟩` states themselves by exact
//!   ladder-operator action on the product basis.
//!
//! Every value is a [`RadicalSum`], an exact `Σ c·√k`, so agreement between
//! routes is checked by equality rather than tolerance. See the crate's
//! `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod ladder;
pub mod numerics;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::{
    cg_alternative, cg_racah, validate, wigner3j, CouplingSpec, ThreeJSpec, Validity,
};
pub use numerics::{h, to_decimal, BigRational, HalfInt, RadicalSum};
pub use table::{build_full_table, CoefficientRecord, Route};

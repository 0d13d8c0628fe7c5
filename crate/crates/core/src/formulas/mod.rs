//! Closed-form coefficients and quantum-number validation.

pub mod alternative;
pub mod racah;
pub mod spec;
pub mod wigner;

pub use alternative::{cg_alternative, normalization_sum, AlternativeFormula};
pub use racah::cg_racah;
pub use spec::{validate, CouplingSpec, SelectionReason, ThreeJSpec, Validity};
pub use wigner::{cg_to_wigner3j, wigner3j};

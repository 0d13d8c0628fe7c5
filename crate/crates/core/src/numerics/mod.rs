//! Exact arithmetic: half-integers, binomials, radical sums and their
//! decimal rendering.

pub mod combinatorics;
pub mod decimal;
pub mod factored;
pub mod half_int;
pub mod radical;
pub mod stats;

pub use combinatorics::{binomial, factorial};
pub use decimal::to_decimal;
pub use factored::PrimeExponents;
pub use half_int::{h, HalfInt};
pub use num_rational::BigRational;
pub use radical::{canonical_sqrt, canonical_sqrt_with, PrimeSieve, RadicalSum};

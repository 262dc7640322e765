//! The algebra 𝕋 = (ℝ³, ⊕, ⊗): a three-dimensional, unital, commutative and
//! associative real algebra with basis `{1, u, v}` and the multiplication table
//!
//! ```text
//!   ⊗ | 1    u    v
//!  ---+-------------
//!   1 | 1    u    v
//!   u | u    v   -1
//!   v | v   -1   -u
//! ```
//!
//! The crate is `no_std` and allocation free. It covers
//!
//! * [`Ternion`] arithmetic, σ-conjugation and the quadratic forms `A`, `B`
//!   ([`element`]),
//! * the decomposition 𝕋 = 𝔻 ⊕ 𝔾 ≅ ℝ × ℂ, zero divisors and inversion
//!   ([`structure`]),
//! * the multiplicative seminorm `‖x‖ = √(A + B)` ([`seminorm`]),
//! * the hyperbolic subplane σ = span{1, δ} ([`sigma`]).
//!
//! ```
//! use ternion::{Ternion, structure};
//!
//! let u = Ternion::U;
//! assert_eq!(u * u, Ternion::V);
//! let inv = structure::invert(u, 1e-9).unwrap();
//! assert!((inv - Ternion::new(0.0, 0.0, -1.0)).max_abs() < 1e-15);
//! assert_eq!(u.norm(), 1.0);
//! ```

#![no_std]

pub mod element;
mod error;
pub mod seminorm;
pub mod sigma;
pub mod structure;

pub use element::{QuadraticPair, RegularRep, Ternion};
pub use error::AlgebraError;
pub use sigma::HyperbolicNumber;
pub use structure::{Classification, SplitForm};

/// Relative tolerance used when a caller does not supply one.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

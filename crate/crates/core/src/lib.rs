//! Exact-arithmetic toolkit for linear Diophantine systems `Ax = b, x >= 0`.
//!
//! Everything runs over arbitrary-precision integers: fraction-free
//! determinants and minors, Hermite and Smith normal forms with unimodular
//! transforms, kernel lattice bases, the minor bound `d` of the augmented
//! matrix `(A b)`, and a complete pruned search for a nonnegative solution
//! whose coordinates all stay below `d`. The [`verify`] module adds seeded
//! instance generation, brute-force oracles, and campaign drivers for the
//! bound, the complementary-minor duality, and the bounded-case vertex
//! property.
//!
//! The crate is `no_std`-compatible (it needs `alloc`); the default `std`
//! feature only contributes wall-clock timing for campaign reports.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod error;
mod feasible;
mod hull;
pub mod linalg;
pub mod matrix;
pub mod system;
mod util;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use system::{DiophantineSystem, KernelRepresentation, SaturationResult, SolutionCertificate};

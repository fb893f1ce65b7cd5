//! Certified enclosures for harmonic numbers and the digamma family, and a
//! mechanical checker for two-sided harmonic-number inequalities.
//!
//! Every transcendental quantity is carried as a [`Ball`](bigmath::Ball): a
//! dyadic midpoint with an outward-rounded radius. Exact quantities (harmonic
//! numbers, Bernoulli numbers) are carried as [`Rational`](bigmath::Rational).
//!
//! The crate is `no_std` and needs only `alloc`; report serialization, the
//! command line and parallel sweeps live in the `harmonic` companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bigmath;
pub mod bounds;
mod error;
pub mod specfun;
pub mod verify;

pub use bigmath::{Ball, BallOrdering, Precision, Rational};
pub use error::{Error, Result};

//! Exact construction of the orthogonal, unitary and quaternionic unitary
//! Cayley–Klein families of real Lie algebras, and of their central
//! extensions.
//!
//! Everything is computed over the rationals: structure constants are read
//! off antihermitian matrices or taken from closed-form bracket tables, the
//! second cohomology `H²(g, ℝ)` comes from exact sparse elimination, and the
//! [`classify`] module predicts the nontrivial extensions for every
//! contraction pattern so the two can be compared.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ck_matrix;
pub mod classify;
pub mod cohomology;
mod error;
pub mod lie;
pub mod linalg;
pub mod scalars;

pub use error::{Error, Result};

//! Exact algebra of Spin(7)-structures with parallel characteristic torsion.
//!
//! The crate works over the number field ℚ(√3, √5) and covers the exterior
//! and Clifford algebra of ℝ⁸, the subalgebra catalog of spin(7), invariant
//! forms and spinors, torsion families with their Ricci and curvature
//! tensors, and the resulting table of admissible isotropy/holonomy pairs.

// Index loops mirror the matrix notation of the linear algebra throughout.
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cli;
pub mod clifford;
pub mod curvature;
pub mod error;
pub mod exterior;
pub mod golden;
pub mod liealg;
pub mod linalg;
pub mod quadric;
pub mod sample;
pub mod scalars;
pub mod spin7;
pub mod verify;

pub use error::{Error, Result};

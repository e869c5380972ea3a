//! Exact computations for finite complex reflection groups: W-Laplacians, Coxeter
//! factorization counts, tower spectra, flat lattices, root zonotopes and symmetric-group
//! characters.

#![allow(clippy::needless_range_loop)]

pub mod config;
pub mod error;
pub mod factorization;
pub mod groups;
pub mod laplacian;
pub mod lattice;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod symfunc;
pub mod towers;
pub mod zonotope;

pub use error::{CoxError, Result};

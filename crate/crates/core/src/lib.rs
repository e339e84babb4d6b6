//! Exact computations with subword complexes of finite crystallographic
//! Coxeter systems: root systems, Bruhat cones, f-antigreedy facets and
//! brick polyhedra.
//!
//! All arithmetic is exact. Roots are integer vectors in the simple-root
//! basis, everything else (weights, brick vectors, cones) lives over
//! arbitrary precision rationals.

pub mod brick;
pub mod bruhat;
pub mod cli;
pub mod coxeter;
mod error;
pub mod geometry;
pub mod subword;

pub use error::{Error, Result};

//! Finite-model engine and theorem checker for primal-proximity spaces.
//!
//! Everything operates on universes of at most five points, where subsets,
//! families, relations, and operators are all small bit tables and every
//! quantifier can be exhausted. The `checker` module carries the theorem
//! registry and sweep machinery; `cli` fronts it from the command line.

pub mod checker;
pub mod cli;
pub mod operators;
pub mod primal;
pub mod proximity;
pub mod sets;
pub mod space;
pub mod topology;

//! Exact computations around weak-Berger algebras: algebraic curvature
//! tensors, weak curvature tensors, first and Tanaka prolongations, and
//! symmetric-space reconstruction, all over Q or Q(i).

pub mod error;
pub mod exactlin;
pub mod catalog;
pub mod curvature;
pub mod liealg;
pub mod tanaka;
pub mod symspace;

pub use error::{Error, Result};

//! Lie algebras by structure constants and their matrix representations.

mod algebra;
pub mod functors;
pub mod io;
mod representation;

pub use algebra::{LieAlgebra, MatrixBasis};
pub use functors::{adjoint, direct_sum, dual, ext_power, external_sum, external_tensor, sym_power, tensor, trivial};
pub use representation::{unflatten, InvariantForm, Representation, Symmetry};



//! Graded Lie algebras, the grading `C F ⊕ C^{2m} ⊕ (k ⊕ C H)` and its Tanaka
//! prolongation.
//!
//! Degrees follow `[H,X] = −X`, `[H,F] = −2F`: `H` acts by the degree on
//! every component, so `g_{−1}` has eigenvalue −1.

mod graded;
mod prolong;
mod proposition;
mod report;

pub use graded::GradedLieAlgebra;
pub use prolong::{
    build_base_grading, full_prolongation, BaseGrading, Elem, ProlongationResult, Termination, Tower,
    DEFAULT_MAX_DEGREE,
};
pub use proposition::{PropositionReport, PropositionSetup};
pub use report::{prolongation_report, ProlongationReport};

#[cfg(test)]
mod tests;

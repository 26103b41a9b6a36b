//! Curvature tensors `R(h)`, weak curvature tensors `P(h)`, covariant
//! derivatives `R∇(h)` and the maps between them.
//!
//! Sign conventions: `(X∧Y)Z = (X,Z)Y − (Y,Z)X`, so `Σ_i (X∧e_i)e_i = (1−n)X`
//! and the sphere tensor `R(X,Y) = X∧Y` has `Ric = (1−n)(·,·)`.

mod lemma;
mod maps;
mod spaces;

pub use lemma::{spanned_by_p_images, spanned_by_r_images, standard_multiplicity, star_lemma_check};
pub use maps::{
    act_on_r, canonical_p1_candidate, decompose_p, decompose_r, identity_tensor, project_to_h, ricci, tau, tau_image,
    tau_raw, transpose_pairing, tric, wedge, PDecomposition, RDecomposition,
};
pub use spaces::{
    first_prolongation, p_value, pair_index, pairs, pspace, r_from_fn, r_value, rnabla_space, rspace, rspace_via_pspace,
    CovDerivSpace, CurvatureSpace, WeakCurvatureSpace,
};

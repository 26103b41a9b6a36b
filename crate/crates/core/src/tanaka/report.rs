use std::collections::BTreeMap;

use serde::Serialize;

use super::prolong::{ProlongationResult, Termination};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct ProlongationReport {
    pub base: BTreeMap<i32, usize>,
    pub prolongation: Vec<usize>,
    pub terminated: bool,
    pub termination: Termination,
    pub assembled_dim: Option<usize>,
    pub simple: Option<bool>,
    pub killing_graded: Option<bool>,
    pub grading_element_ok: Option<bool>,
    /// Rank of `g_1 → g_{−1}`, `u ↦ u(F)`.
    pub g1_psi_rank: usize,
    /// `dim g_1 ∩ (g_{−1}* ⊗ g_0)`.
    pub g1_phi_only_dim: usize,
}

pub fn prolongation_report(res: &ProlongationResult) -> Result<ProlongationReport> {
    let base = res.tower.base.graded.dims();
    let (psi, phi) = res.tower.g1_diagonal_profile().unwrap_or((0, 0));
    let (assembled_dim, simple, killing_graded, grading_ok) = match &res.assembled {
        Some(g) => (
            Some(g.dim()),
            Some(g.is_simple()?),
            Some(g.killing_grading_check()),
            Some(g.grading_element_ok() && g.respects_degrees()),
        ),
        None => (None, None, None, None),
    };
    Ok(ProlongationReport {
        base,
        prolongation: res.dims(),
        terminated: res.terminated(),
        termination: res.termination.clone(),
        assembled_dim,
        simple,
        killing_graded,
        grading_element_ok: grading_ok,
        g1_psi_rank: psi,
        g1_phi_only_dim: phi,
    })
}

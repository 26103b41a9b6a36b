//! Symmetric pairs `g = h ⊕ V` with `[X,Y] = R(X,Y)` and the quaternionic
//! five-step grading of `sl₂ ⊕ k` on `C² ⊗ C^{2m}`.
//!
//! Everything stays at the level of Lie algebras over Q(i). Compact and
//! noncompact duals have the same structure constants here, so reports say
//! "up to duality" and do not pick one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::{self, CatalogEntry};
use crate::curvature::{act_on_r, decompose_r, r_value, rspace, CurvatureSpace};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, Subspace};
use crate::liealg::{LieAlgebra, Representation};
use crate::tanaka::{build_base_grading, full_prolongation, GradedLieAlgebra, DEFAULT_MAX_DEGREE};

/// `h ⊕ V` with basis `b_1 … b_d, e_1 … e_n`.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    pub rep: Representation,
    pub r: Vec<Scalar>,
    pub algebra: LieAlgebra,
}

impl SymmetricPair {
    pub fn h_dim(&self) -> usize {
        self.rep.algebra_dim()
    }

    pub fn v_dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn jacobi(&self) -> bool {
        self.algebra.check_jacobi()
    }

    pub fn report(&self) -> Result<PairReport> {
        let semisimple = self.algebra.is_semisimple();
        let ideal_count = if semisimple { Some(self.algebra.simple_ideal_count()?) } else { None };
        Ok(PairReport {
            dim: self.algebra.dim(),
            jacobi: self.jacobi(),
            bianchi: CurvatureSpace::satisfies_bianchi(&self.rep, &self.r),
            invariant: is_invariant(&self.rep, &self.r),
            semisimple,
            ideal_count,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub dim: usize,
    pub jacobi: bool,
    pub bianchi: bool,
    pub invariant: bool,
    pub semisimple: bool,
    /// Only computed for semisimple algebras (needs Q(i)).
    pub ideal_count: Option<usize>,
}

/// `[A,B] = [A,B]_h`, `[A,X] = AX`, `[X,Y] = R(X,Y)`. Jacobi is not required.
pub fn build_symmetric_pair(rep: &Representation, r: &[Scalar]) -> Result<SymmetricPair> {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let f = rep.field();
    if r.len() != n * (n.saturating_sub(1)) / 2 * d {
        return Err(Error::DimensionMismatch(format!("R has {} coordinates, expected {}", r.len(), n * n.saturating_sub(1) / 2 * d)));
    }
    let dim = d + n;
    let mut c = vec![vec![vec![Scalar::zero(f); dim]; dim]; dim];
    let mut put = |i: usize, j: usize, k: usize, v: &Scalar| {
        c[i][j][k] = v.clone();
        c[j][i][k] = -v;
    };
    let alg = rep.algebra();
    for a in 0..d {
        for b in (a + 1)..d {
            for (k, v) in alg.bracket_basis(a, b).iter().enumerate() {
                put(a, b, k, v);
            }
        }
        let m = rep.matrix(a);
        for j in 0..n {
            for s in 0..n {
                put(a, d + j, d + s, m.get(s, j));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for (k, v) in r_value(r, n, d, i, j, f).iter().enumerate() {
                put(d + i, d + j, k, v);
            }
        }
    }
    let algebra = LieAlgebra::from_structure_constants(c, f)?;
    Ok(SymmetricPair { rep: rep.clone(), r: r.to_vec(), algebra })
}

/// `A·R = 0` for every basis element `A` of `h`.
pub fn is_invariant(rep: &Representation, r: &[Scalar]) -> bool {
    (0..rep.algebra_dim()).all(|a| act_on_r(rep, a, r).iter().all(Scalar::is_zero))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiCharacterization {
    pub bianchi: bool,
    pub invariant: bool,
    pub jacobi: bool,
}

/// Reports Bianchi, invariance and Jacobi for `h ⊕ V` built from `R`, and
/// checks Jacobi ⇔ (Bianchi ∧ invariance).
pub fn jacobi_characterization(rep: &Representation, r: &[Scalar]) -> Result<JacobiCharacterization> {
    let pair = build_symmetric_pair(rep, r)?;
    let out = JacobiCharacterization {
        bianchi: CurvatureSpace::satisfies_bianchi(rep, r),
        invariant: is_invariant(rep, r),
        jacobi: pair.jacobi(),
    };
    if out.jacobi != (out.bianchi && out.invariant) {
        return Err(Error::Consistency(format!("Jacobi {} but Bianchi {} and invariance {}", out.jacobi, out.bianchi, out.invariant)));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuaternionicReport {
    pub status: QuaternionicStatus,
    pub tanaka_dims: BTreeMap<i32, usize>,
    pub tanaka_simple: bool,
    pub tanaka_killing_graded: bool,
    pub pair_dims: Option<BTreeMap<i32, usize>>,
    pub pair_simple: Option<bool>,
    pub pair_killing_graded: Option<bool>,
    pub dims_match: bool,
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuaternionicStatus {
    /// Both sides built and agree in graded dimensions, simplicity and Killing grading.
    Matched,
    /// `g_1 = 0`.
    NoQuaternionicStructure,
    /// Both sides exist but disagree.
    Mismatch,
}

/// The grading of `sl₂ ⊕ k ⊕ C²⊗C^{2m}` by `ad(H)`, `H = diag(1,−1) ∈ sl₂`,
/// built from an invariant curvature tensor of `sl₂ ⊕ k`.
pub fn pair_grading(k_entry: &CatalogEntry) -> Result<Option<GradedLieAlgebra>> {
    let big = catalog::sl2_tensor_symplectic(k_entry)?;
    let rs = rspace(&big.rep);
    let split = decompose_r(&rs)?;
    let Some(r) = split.r1.basis().first() else {
        return Ok(None);
    };
    let pair = build_symmetric_pair(&big.rep, r)?;
    let n = k_entry.rep.dim();
    let mut degrees = vec![-2, 0, 2];
    degrees.extend(std::iter::repeat(0).take(k_entry.rep.algebra_dim()));
    degrees.extend(std::iter::repeat(1).take(n));
    degrees.extend(std::iter::repeat(-1).take(n));
    let g = GradedLieAlgebra { algebra: pair.algebra, degrees, grading_element: Some(1) };
    if !g.algebra.check_jacobi() || !g.respects_degrees() || !g.grading_element_ok() {
        return Err(Error::Consistency("symmetric-pair grading is not a Lie grading".into()));
    }
    Ok(Some(g))
}

/// Compares the assembled Tanaka prolongation of `k` with the grading from the
/// symmetric pair. Requires `m ≥ 2` and a terminated prolongation.
pub fn quaternionic_grading(k_entry: &CatalogEntry) -> Result<QuaternionicReport> {
    let n = k_entry.rep.dim();
    if n < 4 {
        return Err(Error::Precondition(format!("needs k ⊆ sp(2m) with m ≥ 2, got dimension {n}")));
    }
    let base = build_base_grading(&k_entry.rep)?;
    let res = full_prolongation(base, DEFAULT_MAX_DEGREE)?;
    let Some(tanaka) = res.assembled.as_ref() else {
        return Err(Error::Precondition("Tanaka prolongation did not terminate".into()));
    };
    let tanaka_dims = tanaka.dims();
    let tanaka_simple = tanaka.is_simple()?;
    let tanaka_killing_graded = tanaka.killing_grading_check();
    let note = "Lie-algebra level only; the symmetric space is determined up to duality";
    let g1_zero = res.tower.component(1).map_or(true, Subspace::is_zero);
    if g1_zero {
        return Ok(QuaternionicReport {
            status: QuaternionicStatus::NoQuaternionicStructure,
            tanaka_dims,
            tanaka_simple,
            tanaka_killing_graded,
            pair_dims: None,
            pair_simple: None,
            pair_killing_graded: None,
            dims_match: false,
            note,
        });
    }
    let pair = pair_grading(k_entry)?;
    let (pair_dims, pair_simple, pair_killing) = match &pair {
        Some(g) => (Some(g.dims()), Some(g.is_simple()?), Some(g.killing_grading_check())),
        None => (None, None, None),
    };
    let dims_match = pair_dims.as_ref() == Some(&tanaka_dims);
    let agree = dims_match
        && pair_simple == Some(tanaka_simple)
        && pair_killing == Some(tanaka_killing_graded)
        && tanaka_simple
        && tanaka_killing_graded;
    Ok(QuaternionicReport {
        status: if agree { QuaternionicStatus::Matched } else { QuaternionicStatus::Mismatch },
        tanaka_dims,
        tanaka_simple,
        tanaka_killing_graded,
        pair_dims,
        pair_simple,
        pair_killing_graded: pair_killing,
        dims_match,
        note,
    })
}

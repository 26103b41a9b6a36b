use serde::Serialize;

use super::prolong::{build_base_grading, BaseGrading, Tower};
use crate::catalog::{self, CatalogEntry};
use crate::curvature::{pspace, WeakCurvatureSpace};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

/// `P(sl₂ ⊕ k)` on `C² ⊗ C^{2m}` next to `g_1` of the base grading of `k`.
///
/// Coordinates on the tensor product are `a·2m + i` (`a = 0` for `e_1`,
/// `a = 1` for `e_2`); the algebra basis is `F, H, E, k_1, …, k_r`.
/// An element of `g_1` is stored as `ψ(F) ∈ C^{2m}` followed by the blocks
/// `φ(X_i) ∈ k ⊕ CH` (coordinates `k_1 … k_r, H`).
pub struct PropositionSetup {
    pub base: BaseGrading,
    pub g1: Subspace,
    pub ps: WeakCurvatureSpace,
    omega_t_inv: Matrix,
}

impl PropositionSetup {
    pub fn new(k_entry: &CatalogEntry) -> Result<Self> {
        let base = build_base_grading(&k_entry.rep)?;
        let mut tower = Tower::new(base.clone());
        let g1 = tower.prolong_step()?.clone();
        let big = catalog::sl2_tensor_symplectic(k_entry)?;
        let ps = pspace(&big.rep)?;
        let omega_t_inv = base.omega.transpose().inverse().ok_or_else(|| Error::InvalidForm("Ω is degenerate".into()))?;
        Ok(PropositionSetup { base, g1, ps, omega_t_inv })
    }

    fn n(&self) -> usize {
        self.base.n
    }

    fn r(&self) -> usize {
        self.base.r
    }

    /// `(u_1, u_2)` with `u_1(X) = −γ(e_1⊗X)H + T(e_1⊗X)`, `u_1(F) = A`,
    /// `Ω(A,Z) = β(e_2⊗Z)` and `u_2(X) = −γ(e_2⊗X)H − T(e_2⊗X)`, `u_2(F) = B`,
    /// `Ω(B,Z) = −α(e_1⊗Z)`.
    pub fn to_g1_pair(&self, p: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        if !self.ps.contains(p)? {
            return Err(Error::NotInSpace("P(sl2 ⊕ k)".into()));
        }
        let (n, r) = (self.n(), self.r());
        let d = 3 + r;
        let at = |a: usize, i: usize| &p[(a * n + i) * d..(a * n + i + 1) * d];
        for i in 0..n {
            if !at(0, i)[0].is_zero() || !at(1, i)[2].is_zero() {
                return Err(Error::Consistency("β(e1⊗·) or α(e2⊗·) does not vanish".into()));
            }
        }
        let beta2: Vec<Scalar> = (0..n).map(|i| at(1, i)[0].clone()).collect();
        let alpha1: Vec<Scalar> = (0..n).map(|i| -&at(0, i)[2]).collect();
        let mut u1 = self.omega_t_inv.mul_vec(&beta2);
        let mut u2 = self.omega_t_inv.mul_vec(&alpha1);
        for i in 0..n {
            let (v1, v2) = (at(0, i), at(1, i));
            u1.extend(v1[3..].iter().cloned());
            u1.push(-&v1[1]);
            u2.extend(v2[3..].iter().map(|v| -v));
            u2.push(-&v2[1]);
        }
        debug_assert_eq!(u1.len(), self.g1.ambient());
        Ok((u1, u2))
    }

    /// Inverse of [`Self::to_g1_pair`]; errors if the result is not in `P`.
    pub fn from_g1_pair(&self, u1: &[Scalar], u2: &[Scalar]) -> Result<Vec<Scalar>> {
        let (n, r) = (self.n(), self.r());
        let d = 3 + r;
        let f = self.base.field();
        let om_t = self.base.omega.transpose();
        let beta2 = om_t.mul_vec(&u1[..n]);
        let alpha1 = om_t.mul_vec(&u2[..n]);
        let mut p = vec![Scalar::zero(f); 2 * n * d];
        for i in 0..n {
            let b1 = &u1[n + i * (r + 1)..n + (i + 1) * (r + 1)];
            let b2 = &u2[n + i * (r + 1)..n + (i + 1) * (r + 1)];
            let e1 = i * d;
            let e2 = (n + i) * d;
            p[e1 + 1] = -&b1[r];
            p[e1 + 2] = -&alpha1[i];
            p[e2] = beta2[i].clone();
            p[e2 + 1] = -&b2[r];
            for t in 0..r {
                p[e1 + 3 + t] = b1[t].clone();
                p[e2 + 3 + t] = -&b2[t];
            }
        }
        if !self.ps.contains(&p)? {
            return Err(Error::NotInSpace("P(sl2 ⊕ k)".into()));
        }
        Ok(p)
    }

    /// Images of a basis of `P` all lie in `g_1 ⊕ g_1`, the map has full rank,
    /// and the inverse recovers each basis vector.
    pub fn verify(&self) -> Result<PropositionReport> {
        let amb = self.g1.ambient();
        let f = self.base.field();
        let mut images = Vec::with_capacity(self.ps.dim());
        let mut in_g1 = true;
        let mut inverse_ok = true;
        for b in self.ps.space.basis() {
            let (u1, u2) = self.to_g1_pair(b)?;
            in_g1 &= self.g1.contains(&u1)? && self.g1.contains(&u2)?;
            inverse_ok &= self.from_g1_pair(&u1, &u2)? == *b;
            images.push([u1, u2].concat());
        }
        let rank = Subspace::span(2 * amb, f, &images)?.dim();
        Ok(PropositionReport {
            p_dim: self.ps.dim(),
            g1_dim: self.g1.dim(),
            images_in_g1: in_g1,
            map_rank: rank,
            inverse_ok,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub p_dim: usize,
    pub g1_dim: usize,
    pub images_in_g1: bool,
    pub map_rank: usize,
    pub inverse_ok: bool,
}

impl PropositionReport {
    /// `dim P = 2·dim g_1` and the explicit map is an isomorphism onto `g_1 ⊕ g_1`.
    pub fn holds(&self) -> bool {
        self.p_dim == 2 * self.g1_dim && self.images_in_g1 && self.map_rank == self.p_dim && self.inverse_ok
    }
}

use std::collections::BTreeMap;

use crate::error::Result;
use crate::exactlin::Scalar;
use crate::liealg::LieAlgebra;

/// Lie algebra with an integer degree attached to every basis element.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    pub algebra: LieAlgebra,
    pub degrees: Vec<i32>,
    /// Index of a basis element `H` with `[H, x] = deg(x)·x`, when declared.
    pub grading_element: Option<usize>,
}

impl GradedLieAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Component dimensions keyed by degree.
    pub fn dims(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    pub fn component_dim(&self, degree: i32) -> usize {
        self.degrees.iter().filter(|&&d| d == degree).count()
    }

    /// `[g_k, g_l] ⊆ g_{k+l}` on all basis pairs.
    pub fn respects_degrees(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let target = self.degrees[i] + self.degrees[j];
                let ok = self
                    .algebra
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .all(|(k, v)| v.is_zero() || self.degrees[k] == target);
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// `[H, b_i] = deg(b_i)·b_i` for the declared grading element.
    pub fn grading_element_ok(&self) -> bool {
        let Some(h) = self.grading_element else {
            return false;
        };
        let f = self.algebra.field();
        (0..self.dim()).all(|i| {
            let v = self.algebra.bracket_basis(h, i);
            v.iter().enumerate().all(|(k, c)| {
                let expect = if k == i { Scalar::from_int(self.degrees[i] as i64, f) } else { Scalar::zero(f) };
                *c == expect
            })
        })
    }

    /// Killing form pairs `g_k` only with `g_{−k}`.
    pub fn killing_grading_check(&self) -> bool {
        let kf = self.algebra.killing_form();
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.degrees[i] + self.degrees[j] == 0 || kf.get(i, j).is_zero()))
    }

    /// Simplicity over Q(i); `false` for non-semisimple algebras.
    pub fn is_simple(&self) -> Result<bool> {
        if !self.algebra.is_semisimple() {
            return Ok(false);
        }
        self.algebra.is_simple()
    }
}

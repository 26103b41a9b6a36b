use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Equation, Field, LinearSystem, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Skew,
}

impl Symmetry {
    /// Symmetry of a tensor product of forms.
    pub fn product(self, other: Symmetry) -> Symmetry {
        if self == other { Symmetry::Symmetric } else { Symmetry::Skew }
    }

    pub fn sign(self) -> i64 {
        match self {
            Symmetry::Symmetric => 1,
            Symmetry::Skew => -1,
        }
    }
}

/// Nondegenerate bilinear form `B(x, y) = xᵀ·B·y` with declared symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantForm {
    pub matrix: Matrix,
    pub symmetry: Symmetry,
}

impl InvariantForm {
    pub fn new(matrix: Matrix, symmetry: Symmetry) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidForm("form matrix is not square".into()));
        }
        let ok = match symmetry {
            Symmetry::Symmetric => matrix.is_symmetric(),
            Symmetry::Skew => matrix.is_skew(),
        };
        if !ok {
            return Err(Error::InvalidForm(format!("form is not {symmetry:?}").to_lowercase()));
        }
        if matrix.rank() != matrix.nrows() {
            return Err(Error::InvalidForm("form is degenerate".into()));
        }
        Ok(InvariantForm { matrix, symmetry })
    }

    /// Infers the symmetry of a nondegenerate symmetric or skew matrix.
    pub fn detect(matrix: Matrix) -> Result<Self> {
        let symmetry = if matrix.is_symmetric() {
            Symmetry::Symmetric
        } else if matrix.is_skew() {
            Symmetry::Skew
        } else {
            return Err(Error::InvalidForm("form is neither symmetric nor skew".into()));
        };
        Self::new(matrix, symmetry)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::exactlin::dot(x, &self.matrix.mul_vec(y))
    }

    /// `(e_i, e_j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }
}

/// A Lie algebra acting on `F^n` by matrices `ρ(b_i)`, optionally preserving
/// a nondegenerate bilinear form.
///
/// Construction verifies `ρ([x,y]) = [ρ(x), ρ(y)]` exactly, and for an
/// attached form `ρ(x)ᵀB + Bρ(x) = 0` on every basis element.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    matrices: Vec<Matrix>,
    form: Option<InvariantForm>,
}

impl Representation {
    pub fn new(algebra: Arc<LieAlgebra>, matrices: Vec<Matrix>, form: Option<InvariantForm>) -> Result<Self> {
        let rep = Representation { algebra, matrices, form };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<()> {
        let d = self.algebra.dim();
        if self.matrices.len() != d {
            return Err(Error::DimensionMismatch(format!("{} matrices for a {d}-dimensional algebra", self.matrices.len())));
        }
        let n = self.matrices.first().map_or_else(|| self.form.as_ref().map_or(0, InvariantForm::dim), Matrix::nrows);
        if self.matrices.iter().any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(Error::DimensionMismatch("representation matrices of different sizes".into()));
        }
        for i in 0..d {
            for j in (i + 1)..d {
                let lhs = self.image(self.algebra.bracket_basis(i, j));
                let rhs = self.matrices[i].commutator(&self.matrices[j]);
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(format!("ρ([b{i},b{j}]) ≠ [ρ(b{i}),ρ(b{j})]")));
                }
            }
        }
        if let Some(form) = &self.form {
            if form.dim() != n {
                return Err(Error::InvalidForm(format!("{}-dimensional form on a {n}-dimensional module", form.dim())));
            }
            for (i, m) in self.matrices.iter().enumerate() {
                let t = &(&m.transpose() * &form.matrix) + &(&form.matrix * m);
                if !t.is_zero() {
                    return Err(Error::InvalidForm(format!("form is not invariant under b{i}")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.form.as_ref().map(InvariantForm::dim).or_else(|| self.matrices.first().map(Matrix::nrows)).unwrap_or(0)
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn form(&self) -> Option<&InvariantForm> {
        self.form.as_ref()
    }

    pub fn require_form(&self) -> Result<&InvariantForm> {
        self.form.as_ref().ok_or(Error::MissingForm)
    }

    /// Same module with a different (validated) form.
    pub fn with_form(&self, form: Option<InvariantForm>) -> Result<Self> {
        Representation::new(self.algebra.clone(), self.matrices.clone(), form)
    }

    /// `ρ(x)` for `x` given in algebra coordinates.
    pub fn image(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n, self.field());
        for (c, m) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    /// Vectors annihilated by the whole algebra: `∩ ker ρ(x)`.
    pub fn invariants(&self) -> Subspace {
        let n = self.dim();
        let mut sys = LinearSystem::new(n, self.field());
        for m in &self.matrices {
            for row in m.rows_iter() {
                sys.push_sparse(row.iter().enumerate().map(|(j, v)| (j, v.clone())));
            }
        }
        sys.kernel()
    }

    /// Equivariant maps `T: self → other`, as flattened `other.dim × self.dim`
    /// matrices (row-major).
    pub fn hom_space(&self, other: &Representation) -> Result<Subspace> {
        if !self.same_algebra(other) {
            return Err(Error::Precondition("hom space between modules of different algebras".into()));
        }
        Ok(hom_space_of(&self.matrices, &other.matrices, self.field()))
    }

    /// Matrices commuting with every `ρ(x)`.
    pub fn commutant(&self) -> Subspace {
        hom_space_of(&self.matrices, &self.matrices, self.field())
    }

    /// Absolute irreducibility: the commutant is one-dimensional over Q(i).
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.field() != Field::QI {
            return Err(Error::Precondition("irreducibility test needs the field Q(i)".into()));
        }
        Ok(self.dim() > 0 && self.commutant().dim() == 1)
    }

    /// All `B` with `ρ(x)ᵀB + Bρ(x) = 0`, as flattened `n × n` matrices.
    pub fn invariant_bilinear_forms(&self) -> Subspace {
        let n = self.dim();
        let mut sys = LinearSystem::new(n * n, self.field());
        for m in &self.matrices {
            let mut eqs = vec![Equation::new(); n * n];
            for s in 0..n {
                for (c, v) in m.row(s).iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    // ρ[s][c] contributes to (ρᵀB)[c][q] via B[s][q] and to (Bρ)[p][c] via B[p][s].
                    for q in 0..n {
                        eqs[c * n + q].add(s * n + q, v);
                    }
                    for p in 0..n {
                        eqs[p * n + c].add(p * n + s, v);
                    }
                }
            }
            for eq in eqs {
                sys.push(eq);
            }
        }
        sys.kernel()
    }

    /// Restriction to an invariant subspace, in its canonical coordinates.
    /// The attached form is restricted too and must stay nondegenerate.
    pub fn subrepresentation(&self, sub: &Subspace) -> Result<Representation> {
        let k = sub.dim();
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for m in &self.matrices {
            let mut out = Matrix::zeros(k, k, self.field());
            for (j, b) in sub.basis().iter().enumerate() {
                let image = m.mul_vec(b);
                let c = sub.coordinates(&image).ok_or_else(|| Error::NotInSpace("an invariant subspace".into()))?;
                for (i, v) in c.into_iter().enumerate() {
                    out.set(i, j, v);
                }
            }
            matrices.push(out);
        }
        let form = match &self.form {
            Some(f) => {
                let w = sub.basis_matrix();
                let restricted = &(&w.transpose() * &f.matrix) * &w;
                Some(InvariantForm::new(restricted, f.symmetry)?)
            }
            None => None,
        };
        Representation::new(self.algebra.clone(), matrices, form)
    }

    /// Module coordinates of `ρ(b_a)·v`.
    pub fn act(&self, a: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.matrices[a].mul_vec(v)
    }
}

/// `{T : T·A_i = B_i·T}` for matrix tuples `A` (n1×n1) and `B` (n2×n2); `T`
/// is flattened row-major as an `n2 × n1` matrix.
pub(crate) fn hom_space_of(a: &[Matrix], b: &[Matrix], field: Field) -> Subspace {
    let n1 = a.first().map_or(0, Matrix::nrows);
    let n2 = b.first().map_or(0, Matrix::nrows);
    let mut sys = LinearSystem::new(n1 * n2, field);
    for (ma, mb) in a.iter().zip(b) {
        let mut eqs = vec![Equation::new(); n2 * n1];
        // (T·A)[p][q] = Σ_s T[p][s]·A[s][q]
        for s in 0..n1 {
            for (q, v) in ma.row(s).iter().enumerate() {
                if !v.is_zero() {
                    for p in 0..n2 {
                        eqs[p * n1 + q].add(p * n1 + s, v);
                    }
                }
            }
        }
        // (B·T)[p][q] = Σ_s B[p][s]·T[s][q]
        for p in 0..n2 {
            for (s, v) in mb.row(p).iter().enumerate() {
                if !v.is_zero() {
                    for q in 0..n1 {
                        eqs[p * n1 + q].sub(s * n1 + q, v);
                    }
                }
            }
        }
        for eq in eqs {
            sys.push(eq);
        }
    }
    if a.is_empty() {
        return Subspace::full(n1 * n2, field);
    }
    sys.kernel()
}

/// Unflattens a row-major vector into an `rows × cols` matrix.
pub fn unflatten(v: &[Scalar], rows: usize, cols: usize, field: Field) -> Matrix {
    Matrix::from_fn(rows, cols, field, |i, j| v[i * cols + j].clone())
}

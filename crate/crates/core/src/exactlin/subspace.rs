use super::elim::{self, dense_to_sparse};
use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Linear subspace of a coordinate space, stored by its canonical basis.
///
/// The basis vectors are the nonzero rows of the reduced row-echelon form of
/// any spanning set, so two equal subspaces always store identical bases and
/// derived equality is subspace equality. Coordinates with respect to this
/// basis are read off at the pivot positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: Field) -> Self {
        Subspace { ambient, field, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize, field: Field) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| Scalar::from_int((i == j) as i64, field)).collect())
            .collect();
        Subspace { ambient, field, basis, pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors.
    pub fn span<V: AsRef<[Scalar]>>(ambient: usize, field: Field, vectors: &[V]) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!("vector of length {} in {ambient}-space", v.len())));
            }
            rows.push(dense_to_sparse(v));
        }
        Ok(Self::span_sparse(ambient, field, &rows))
    }

    pub(crate) fn span_sparse(ambient: usize, field: Field, rows: &[Vec<(usize, Scalar)>]) -> Self {
        let reduced = elim::rref_sparse(rows, ambient, field);
        Subspace { ambient, field, basis: reduced.rows, pivots: reduced.pivots }
    }

    /// Span of the columns of `m`.
    pub fn column_span(m: &Matrix) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..m.ncols()).map(|j| m.column(j)).collect();
        Self::span(m.nrows(), m.field(), &cols).expect("columns have matching length")
    }

    /// Null space of the system whose rows are given sparsely.
    pub(crate) fn kernel_of_rows(rows: &[Vec<(usize, Scalar)>], ncols: usize, field: Field) -> Self {
        let reduced = elim::rref_sparse(rows, ncols, field);
        let mut is_pivot = vec![false; ncols];
        for &p in &reduced.pivots {
            is_pivot[p] = true;
        }
        let generators: Vec<Vec<(usize, Scalar)>> = (0..ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![(f, Scalar::one(field))];
                for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
                    if !row[f].is_zero() {
                        v.push((p, -&row[f]));
                    }
                }
                v
            })
            .collect();
        Self::span_sparse(ncols, field, &generators)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_fn(self.ambient, self.dim(), self.field, |i, j| self.basis[j][i].clone())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of {}- and {}-dimensional spaces",
                self.ambient, other.ambient
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    /// Linear combination of the basis vectors.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!("vector of length {} in {}-space", v.len(), self.ambient)));
        }
        Ok(self.coordinates(v).is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.basis.iter().all(|b| other.coordinates(b).is_some()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let rows: Vec<_> = self.basis.iter().chain(&other.basis).map(|b| dense_to_sparse(b)).collect();
        Ok(Self::span_sparse(self.ambient, self.field, &rows))
    }

    /// Intersection via the kernel of `[A | −B]`: vectors `A·x = B·y`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let (da, db) = (self.dim(), other.dim());
        let rows: Vec<Vec<(usize, Scalar)>> = (0..self.ambient)
            .map(|i| {
                let mut row = Vec::new();
                for (j, b) in self.basis.iter().enumerate() {
                    if !b[i].is_zero() {
                        row.push((j, b[i].clone()));
                    }
                }
                for (j, b) in other.basis.iter().enumerate() {
                    if !b[i].is_zero() {
                        row.push((da + j, -&b[i]));
                    }
                }
                row
            })
            .collect();
        let kernel = Self::kernel_of_rows(&rows, da + db, self.field);
        let vectors: Vec<Vec<Scalar>> = kernel.basis.iter().map(|k| self.combine(&k[..da])).collect();
        Self::span(self.ambient, self.field, &vectors)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    /// Image of the subspace under a linear map given by `f` on basis vectors.
    pub fn map(&self, target_ambient: usize, mut f: impl FnMut(&[Scalar]) -> Vec<Scalar>) -> Result<Subspace> {
        let images: Vec<Vec<Scalar>> = self.basis.iter().map(|b| f(b)).collect();
        Self::span(target_ambient, self.field, &images)
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::elim::{self, dense_to_sparse};
use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense matrix over Q or Q(i), stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Matrix { rows, cols, field, data: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        Matrix::from_fn(n, n, field, |i, j| Scalar::from_int((i == j) as i64, field))
    }

    /// Builds a matrix whose entries are coerced into `field`.
    ///
    /// Panics if `f` produces a nonreal value for a `Q` matrix.
    pub fn from_fn(rows: usize, cols: usize, field: Field, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j).in_field(field).expect("entry outside the matrix field"));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Builds a matrix from rows; all entries must carry the same field tag.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let field = rows.iter().flatten().next().map_or(Field::Q, Scalar::field);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for entry in row {
                if entry.field() != field {
                    return Err(Error::FieldMismatch { expected: field, found: entry.field() });
                }
                data.push(entry);
            }
        }
        Ok(Matrix { rows: nrows, cols: ncols, field, data })
    }

    /// Builds a matrix from small integers.
    pub fn from_ints(rows: &[&[i64]], field: Field) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(rows.len(), ncols, field, |i, j| Scalar::from_int(rows[i][j], field))
    }

    /// Re-tags every entry; fails if a nonreal entry is forced into `Q`.
    pub fn in_field(self, field: Field) -> Result<Self> {
        let data = self.data.into_iter().map(|s| s.in_field(field)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field, data })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    /// Panics if a nonreal value is written into a `Q` matrix.
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value.in_field(self.field).expect("entry outside the matrix field");
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows_iter().map(<[Scalar]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..=i).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let field = self.field.join(c.field());
        Matrix::from_fn(self.rows, self.cols, field, |i, j| self.get(i, j) * c)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Kronecker product; index `(i, j)` of the result is `i·other.n + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let field = self.field.join(other.field);
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, field, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                return Scalar::zero(field);
            }
            a * other.get(i % r2, j % c2)
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.field);
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!("hstack {} vs {} rows", self.rows, other.rows)));
        }
        self.check_field(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        }))
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("vstack {} vs {} cols", self.cols, other.cols)));
        }
        self.check_field(other)?;
        Ok(Matrix::from_fn(self.rows + other.rows, self.cols, self.field, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { other.get(i - self.rows, j).clone() }
        }))
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let field = self.field.join(other.field);
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, field, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => Scalar::zero(field),
            }
        })
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    fn check_entries(&self) -> Result<()> {
        match self.data.iter().find(|s| s.field() != self.field) {
            Some(s) => Err(Error::FieldMismatch { expected: self.field, found: s.field() }),
            None => Ok(()),
        }
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, Scalar)>> {
        self.rows_iter().map(dense_to_sparse).collect()
    }

    /// Reduced row-echelon form with leftmost pivots.
    pub fn rref(&self) -> Result<RowEchelon> {
        self.check_entries()?;
        let reduced = elim::rref_sparse(&self.sparse_rows(), self.cols, self.field);
        let rank = reduced.pivots.len();
        let mut matrix = Matrix::zeros(self.rows, self.cols, self.field);
        for (i, row) in reduced.rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                matrix.data[i * self.cols + j] = v;
            }
        }
        Ok(RowEchelon { matrix, rank, pivots: reduced.pivots })
    }

    pub fn rank(&self) -> usize {
        elim::pivots_sparse(&self.sparse_rows(), self.cols, self.field).len()
    }

    /// Canonical basis of `{v : self·v = 0}`.
    pub fn kernel(&self) -> Result<Subspace> {
        self.check_entries()?;
        Ok(Subspace::kernel_of_rows(&self.sparse_rows(), self.cols, self.field))
    }

    /// One exact solution of `self·x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("rhs length {} for {} rows", b.len(), self.rows)));
        }
        self.check_entries()?;
        let field = self.field.join(b.iter().fold(Field::Q, |f, s| f.join(s.field())));
        let rows: Vec<Vec<(usize, Scalar)>> = self
            .rows_iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut sparse = dense_to_sparse(row);
                if !rhs.is_zero() {
                    sparse.push((self.cols, rhs.clone()));
                }
                sparse
            })
            .collect();
        let reduced = elim::rref_sparse(&rows, self.cols + 1, field);
        if reduced.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(field); self.cols];
        for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n, self.field)).ok()?;
        let reduced = aug.rref().ok()?;
        if reduced.pivots.iter().copied().take(n).ne(0..n) || reduced.rank < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, self.field, |i, j| reduced.matrix.get(i, n + j).clone()))
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let field = self.field.join(rhs.field);
        let mut out = Matrix::zeros(self.rows, rhs.cols, field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        let field = self.field.join(rhs.field);
        Matrix::from_fn(self.rows, self.cols, field, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        let field = self.field.join(rhs.field);
        Matrix::from_fn(self.rows, self.cols, field, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| -self.get(i, j))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows, Field::Q)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(3, Field::Q);
        let r = id.rref().unwrap();
        assert_eq!(r.matrix, id);
        assert_eq!((r.rank, r.pivots), (3, vec![0, 1, 2]));

        let z = Matrix::zeros(2, 3, Field::Q);
        let r = z.rref().unwrap();
        assert_eq!(r.matrix, z);
        assert_eq!((r.rank, r.pivots.len()), (0, 0));
    }

    #[test]
    fn rref_rank_one() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let r = m.rref().unwrap();
        assert_eq!(r.matrix, q(&[&[1, 2, 3], &[0, 0, 0]]));
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
        assert_eq!(m.kernel().unwrap().dim(), 2);
    }

    #[test]
    fn rref_rejects_mixed_fields() {
        let bad = Matrix::from_rows(vec![vec![Scalar::from(1), Scalar::i()]]);
        assert!(matches!(bad, Err(Error::FieldMismatch { .. })));

        // Constructed directly, a stray Q(i) entry in a Q matrix is caught by rref.
        let mut m = Matrix::zeros(1, 2, Field::Q);
        m.data[1] = Scalar::i();
        assert!(matches!(m.rref(), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::identity(4, Field::Q).kernel().unwrap().dim(), 0);
        assert_eq!(Matrix::zeros(2, 3, Field::Q).kernel().unwrap().dim(), 3);
    }

    #[test]
    fn solve_cases() {
        let b: Vec<Scalar> = [3, -1].map(Scalar::from).to_vec();
        assert_eq!(Matrix::identity(2, Field::Q).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(2, 2, Field::Q).solve(&b).unwrap(), None);
        let m = q(&[&[1, 1], &[1, -1]]);
        let rhs = [2, 0].map(Scalar::from);
        assert_eq!(m.solve(&rhs).unwrap(), Some(vec![Scalar::from(1), Scalar::from(1)]));
    }

    #[test]
    fn inverse_and_kron() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2, Field::Q));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let k = Matrix::identity(2, Field::Q).kron(&m);
        assert_eq!(k.get(3, 2), &Scalar::from(1));
        assert_eq!(k.get(0, 2), &Scalar::from(0));
    }
}

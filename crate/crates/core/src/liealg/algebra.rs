use crate::error::{Error, Result};
use crate::exactlin::{axpy, zero_vector, Field, LinearSystem, Matrix, Scalar, Subspace};

/// Finite-dimensional Lie algebra given by structure constants:
/// `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    field: Field,
    /// `brackets[i * dim + j]` holds the coordinates of `[b_i, b_j]`.
    brackets: Vec<Vec<Scalar>>,
    labels: Option<Vec<String>>,
}

impl LieAlgebra {
    /// Builds an algebra from `c[i][j][k]`; rejects constants that are not
    /// antisymmetric. Jacobi is not enforced here, see [`Self::check_jacobi`].
    pub fn from_structure_constants(constants: Vec<Vec<Vec<Scalar>>>, field: Field) -> Result<Self> {
        let dim = constants.len();
        let mut brackets = Vec::with_capacity(dim * dim);
        for row in &constants {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(Error::DimensionMismatch("structure constants must be d×d×d".into()));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let v = constants[i][j].iter().map(|s| s.clone().in_field(field)).collect::<Result<Vec<_>>>()?;
                brackets.push(v);
            }
        }
        for i in 0..dim {
            for j in 0..=i {
                let (a, b) = (&brackets[i * dim + j], &brackets[j * dim + i]);
                if a.iter().zip(b).any(|(x, y)| *x != -y) {
                    return Err(Error::Precondition(format!("bracket [b{i}, b{j}] is not antisymmetric")));
                }
            }
        }
        Ok(LieAlgebra { dim, field, brackets, labels: None })
    }

    /// The matrix Lie algebra spanned by `basis`, in that basis.
    pub fn from_matrix_basis(basis: &[Matrix], field: Field) -> Result<Self> {
        let coords = MatrixBasis::new(basis, field)?;
        let dim = basis.len();
        let mut brackets = vec![zero_vector(dim, field); dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let c = coords
                    .coordinates(&basis[i].commutator(&basis[j]))
                    .ok_or_else(|| Error::Precondition(format!("span not closed under [b{i}, b{j}]")))?;
                brackets[j * dim + i] = c.iter().map(|x| -x).collect();
                brackets[i * dim + j] = c;
            }
        }
        Ok(LieAlgebra { dim, field, brackets, labels: None })
    }

    pub fn abelian(dim: usize, field: Field) -> Self {
        LieAlgebra { dim, field, brackets: vec![zero_vector(dim, field); dim * dim], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Re-tag over another field (only `Q → QI` or identity make sense).
    pub fn in_field(&self, field: Field) -> Result<Self> {
        let brackets = self
            .brackets
            .iter()
            .map(|v| v.iter().map(|s| s.clone().in_field(field)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(LieAlgebra { dim: self.dim, field, brackets, labels: self.labels.clone() })
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.brackets[i * self.dim + j][k]
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.bracket_basis(i, j).to_vec()).collect()).collect()
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.brackets[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vector(self.dim, self.field);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
                }
            }
        }
        out
    }

    /// `ad(b_i)` as a matrix: column `j` holds `[b_i, b_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, self.field, |k, j| self.structure_constant(i, j, k).clone())
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, self.field, |k, j| {
            let mut acc = Scalar::zero(self.field);
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    acc += &(xi * self.structure_constant(i, j, k));
                }
            }
            acc
        })
    }

    /// True iff `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let d = self.dim;
        let basis = |i: usize| -> Vec<Scalar> {
            (0..d).map(|k| Scalar::from_int((k == i) as i64, self.field)).collect()
        };
        for x in 0..d {
            for y in (x + 1)..d {
                for z in (y + 1)..d {
                    let mut total = self.bracket(&basis(x), self.bracket_basis(y, z));
                    let t2 = self.bracket(&basis(y), self.bracket_basis(z, x));
                    let t3 = self.bracket(&basis(z), self.bracket_basis(x, y));
                    axpy(&mut total, &Scalar::one(self.field), &t2);
                    axpy(&mut total, &Scalar::one(self.field), &t3);
                    if total.iter().any(|s| !s.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `B(x, y) = tr(ad x ∘ ad y)` in the given basis.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut out = Matrix::zeros(self.dim, self.dim, self.field);
        for i in 0..self.dim {
            for j in 0..=i {
                let t = (&ads[i] * &ads[j]).trace();
                out.set(j, i, t.clone());
                out.set(i, j, t);
            }
        }
        out
    }

    /// Cartan's criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim
    }

    /// Number of simple ideals of a split semisimple algebra over Q(i),
    /// computed as the dimension of the commutant of the adjoint action.
    pub fn simple_ideal_count(&self) -> Result<usize> {
        if self.field != Field::QI {
            return Err(Error::Precondition("simple ideal count needs the split field Q(i)".into()));
        }
        if !self.is_semisimple() {
            return Err(Error::Precondition("simple ideal count needs a semisimple algebra".into()));
        }
        Ok(self.adjoint_commutant().dim())
    }

    pub fn is_simple(&self) -> Result<bool> {
        Ok(self.dim > 0 && self.simple_ideal_count()? == 1)
    }

    /// `{M : M·ad(b_i) = ad(b_i)·M ∀i}` as flattened d×d matrices.
    pub(crate) fn adjoint_commutant(&self) -> Subspace {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        super::representation::hom_space_of(&ads, &ads, self.field)
    }

    /// Center `{x : [x, b_j] = 0 ∀j}`.
    pub fn center(&self) -> Subspace {
        let d = self.dim;
        let mut sys = LinearSystem::new(d, self.field);
        for j in 0..d {
            for k in 0..d {
                sys.push_sparse((0..d).map(|i| (i, self.structure_constant(i, j, k).clone())));
            }
        }
        sys.kernel()
    }

    /// `self ⊕ other` with the basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let field = self.field.join(other.field);
        let d = self.dim + other.dim;
        let mut brackets = vec![zero_vector(d, field); d * d];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, v) in self.bracket_basis(i, j).iter().enumerate() {
                    brackets[i * d + j][k] = v.clone().in_field(field).unwrap();
                }
            }
        }
        let o = self.dim;
        for i in 0..other.dim {
            for j in 0..other.dim {
                for (k, v) in other.bracket_basis(i, j).iter().enumerate() {
                    brackets[(o + i) * d + o + j][o + k] = v.clone().in_field(field).unwrap();
                }
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        LieAlgebra { dim: d, field, brackets, labels }
    }

    /// 3-dimensional Heisenberg algebra: `[x, y] = z`.
    pub fn heisenberg(field: Field) -> Self {
        let mut c = vec![vec![zero_vector(3, field); 3]; 3];
        c[0][1][2] = Scalar::one(field);
        c[1][0][2] = -Scalar::one(field);
        LieAlgebra::from_structure_constants(c, field).expect("antisymmetric")
    }
}

/// Coordinates of matrices in a fixed linearly independent matrix basis.
///
/// Picks `d` entry positions on which the basis is independent and inverts
/// the resulting `d × d` block; every lookup is then verified on all entries.
#[derive(Clone, Debug)]
pub struct MatrixBasis {
    basis: Vec<Matrix>,
    positions: Vec<usize>,
    inverse: Matrix,
    field: Field,
}

impl MatrixBasis {
    pub fn new(basis: &[Matrix], field: Field) -> Result<Self> {
        let d = basis.len();
        let Some(first) = basis.first() else {
            return Ok(MatrixBasis { basis: Vec::new(), positions: Vec::new(), inverse: Matrix::zeros(0, 0, field), field });
        };
        let n = first.nrows() * first.ncols();
        if basis.iter().any(|m| m.nrows() * m.ncols() != n) {
            return Err(Error::DimensionMismatch("basis matrices of different shapes".into()));
        }
        // Rows of this d×n matrix are the flattened basis matrices; its pivot
        // columns are entry positions on which the basis is independent.
        let flat = Matrix::from_fn(d, n, field, |i, j| basis[i].entries()[j].clone());
        let reduced = flat.rref()?;
        if reduced.rank < d {
            return Err(Error::Precondition("basis matrices are linearly dependent".into()));
        }
        let positions = reduced.pivots;
        let block = Matrix::from_fn(d, d, field, |p, i| basis[i].entries()[positions[p]].clone());
        let inverse = block.inverse().expect("pivot block is invertible");
        Ok(MatrixBasis { basis: basis.to_vec(), positions, inverse, field })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let entries = m.entries();
        let picked: Vec<Scalar> = self.positions.iter().map(|&p| entries[p].clone()).collect();
        let coords = self.inverse.mul_vec(&picked);
        (self.combine(&coords) == *m).then_some(coords)
    }

    pub fn combine(&self, coords: &[Scalar]) -> Matrix {
        let (r, c) = self.basis.first().map_or((0, 0), |m| (m.nrows(), m.ncols()));
        let mut out = Matrix::zeros(r, c, self.field);
        for (x, m) in coords.iter().zip(&self.basis) {
            if !x.is_zero() {
                out = &out + &m.scale(x);
            }
        }
        out
    }
}

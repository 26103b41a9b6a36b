//! Exact linear algebra over Q and Q(i).

mod elim;
mod matrix;
mod scalar;
mod subspace;
mod system;

pub use matrix::{Matrix, RowEchelon};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use system::{Equation, LinearSystem};

use crate::error::Result;

pub fn rref(m: &Matrix) -> Result<RowEchelon> {
    m.rref()
}

pub fn kernel_basis(m: &Matrix) -> Result<Subspace> {
    m.kernel()
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    m.solve(b)
}

/// Vector of scalars in `field` from small integers.
pub fn int_vector(values: &[i64], field: Field) -> Vec<Scalar> {
    values.iter().map(|&v| Scalar::from_int(v, field)).collect()
}

pub fn zero_vector(n: usize, field: Field) -> Vec<Scalar> {
    vec![Scalar::zero(field); n]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `Σ a[i]·b[i]`.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero(Field::Q);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// `y += c·x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use super::algebra::LieAlgebra;
use super::representation::{InvariantForm, Representation, Symmetry};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

/// Zero action of `algebra` on `F^n`.
pub fn trivial(algebra: Arc<LieAlgebra>, n: usize) -> Representation {
    let field = algebra.field();
    let matrices = vec![Matrix::zeros(n, n, field); algebra.dim()];
    Representation::new(algebra, matrices, None).expect("zero action is a representation")
}

/// Adjoint representation; carries the Killing form when it is nondegenerate.
pub fn adjoint(algebra: Arc<LieAlgebra>) -> Result<Representation> {
    let matrices: Vec<Matrix> = (0..algebra.dim()).map(|i| algebra.ad_basis(i)).collect();
    let form = InvariantForm::new(algebra.killing_form(), Symmetry::Symmetric).ok();
    Representation::new(algebra, matrices, form)
}

/// `ρ*(x) = −ρ(x)ᵀ`; an attached form `B` induces `B⁻¹` on the dual.
pub fn dual(rep: &Representation) -> Result<Representation> {
    let matrices = rep.matrices().iter().map(|m| -&m.transpose()).collect();
    let form = match rep.form() {
        Some(f) => {
            let inv = f.matrix.inverse().ok_or_else(|| Error::InvalidForm("form is degenerate".into()))?;
            Some(InvariantForm::new(inv, f.symmetry)?)
        }
        None => None,
    };
    Representation::new(rep.algebra_arc().clone(), matrices, form)
}

fn require_same(a: &Representation, b: &Representation) -> Result<()> {
    if a.same_algebra(b) {
        Ok(())
    } else {
        Err(Error::Precondition("modules of different algebras".into()))
    }
}

fn sum_form(a: &Representation, b: &Representation) -> Option<InvariantForm> {
    match (a.form(), b.form()) {
        (Some(fa), Some(fb)) if fa.symmetry == fb.symmetry => {
            Some(InvariantForm { matrix: fa.matrix.block_diag(&fb.matrix), symmetry: fa.symmetry })
        }
        _ => None,
    }
}

fn tensor_form(a: &Representation, b: &Representation) -> Option<InvariantForm> {
    match (a.form(), b.form()) {
        (Some(fa), Some(fb)) => {
            Some(InvariantForm { matrix: fa.matrix.kron(&fb.matrix), symmetry: fa.symmetry.product(fb.symmetry) })
        }
        _ => None,
    }
}

/// `V ⊕ W` for one algebra. The form is kept when both summands carry forms
/// of the same symmetry.
pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    require_same(a, b)?;
    let matrices = a.matrices().iter().zip(b.matrices()).map(|(x, y)| x.block_diag(y)).collect();
    Representation::new(a.algebra_arc().clone(), matrices, sum_form(a, b))
}

/// `V ⊗ W` for one algebra, basis `v_i ⊗ w_j` at index `i·dim W + j`.
pub fn tensor(a: &Representation, b: &Representation) -> Result<Representation> {
    require_same(a, b)?;
    let field = a.field();
    let ia = Matrix::identity(a.dim(), field);
    let ib = Matrix::identity(b.dim(), field);
    let matrices = a.matrices().iter().zip(b.matrices()).map(|(x, y)| &x.kron(&ib) + &ia.kron(y)).collect();
    Representation::new(a.algebra_arc().clone(), matrices, tensor_form(a, b))
}

/// `g₁ ⊕ g₂` acting on `V ⊗ W`: first-algebra basis acts on the left factor,
/// second-algebra basis on the right factor.
pub fn external_tensor(a: &Representation, b: &Representation) -> Result<Representation> {
    let field = a.field().join(b.field());
    let algebra = Arc::new(a.algebra().in_field(field)?.direct_sum(&b.algebra().in_field(field)?));
    let ia = Matrix::identity(a.dim(), field);
    let ib = Matrix::identity(b.dim(), field);
    let mut matrices: Vec<Matrix> = a.matrices().iter().map(|x| x.kron(&ib)).collect();
    matrices.extend(b.matrices().iter().map(|y| ia.kron(y)));
    let matrices = matrices.into_iter().map(|m| m.in_field(field)).collect::<Result<_>>()?;
    Representation::new(algebra, matrices, tensor_form(a, b).map(|f| promote(f, field)).transpose()?)
}

/// `g₁ ⊕ g₂` acting on `V ⊕ W`, each summand acting on its own block.
pub fn external_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    let field = a.field().join(b.field());
    let algebra = Arc::new(a.algebra().in_field(field)?.direct_sum(&b.algebra().in_field(field)?));
    let za = Matrix::zeros(a.dim(), a.dim(), field);
    let zb = Matrix::zeros(b.dim(), b.dim(), field);
    let mut matrices: Vec<Matrix> = a.matrices().iter().map(|x| x.block_diag(&zb)).collect();
    matrices.extend(b.matrices().iter().map(|y| za.block_diag(y)));
    let matrices = matrices.into_iter().map(|m| m.in_field(field)).collect::<Result<_>>()?;
    Representation::new(algebra, matrices, sum_form(a, b).map(|f| promote(f, field)).transpose()?)
}

fn promote(f: InvariantForm, field: Field) -> Result<InvariantForm> {
    Ok(InvariantForm { matrix: f.matrix.in_field(field)?, symmetry: f.symmetry })
}

/// Index multisets of size `k` from `0..n`, lexicographic. Repetition allowed
/// when `repeat` is set (symmetric powers), strictly increasing otherwise.
pub fn multisets(n: usize, k: usize, repeat: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, repeat: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, if repeat { i } else { i + 1 }, repeat, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, repeat, &mut cur, &mut out);
    out
}

/// Sign of the permutation sorting `v`, or `None` on a repeated entry.
fn sort_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) { None } else { Some(sign) }
}

/// Permanent (`det = false`) or determinant of a small square matrix.
fn small_perm_det(m: &[Vec<Scalar>], det: bool) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one(Field::Q);
    }
    let mut acc = Scalar::zero(Field::Q);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &m[0][j] * &small_perm_det(&minor, det);
        if det && j % 2 == 1 {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    acc
}

fn power(rep: &Representation, k: usize, symmetric: bool) -> Result<Representation> {
    let n = rep.dim();
    let field = rep.field();
    let basis = multisets(n, k, symmetric);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = basis.len();
    let mut matrices = Vec::with_capacity(rep.algebra_dim());
    for m in rep.matrices() {
        let mut out = Matrix::zeros(dim, dim, field);
        for (col, word) in basis.iter().enumerate() {
            for t in 0..k {
                for j in 0..n {
                    let c = m.get(j, word[t]);
                    if c.is_zero() {
                        continue;
                    }
                    let mut w = word.clone();
                    w[t] = j;
                    let sign = if symmetric {
                        w.sort_unstable();
                        1
                    } else {
                        match sort_sign(&mut w) {
                            Some(s) => s,
                            None => continue,
                        }
                    };
                    let row = index[&w];
                    let v = out.get(row, col) + &(c * &Scalar::from_int(sign, field));
                    out.set(row, col, v);
                }
            }
        }
        matrices.push(out);
    }
    let form = match rep.form() {
        Some(f) => {
            let g = Matrix::from_fn(dim, dim, field, |a, b| {
                let sub: Vec<Vec<Scalar>> =
                    basis[a].iter().map(|&i| basis[b].iter().map(|&j| f.entry(i, j).clone()).collect()).collect();
                small_perm_det(&sub, !symmetric)
            });
            let symmetry = if f.symmetry == Symmetry::Skew && k % 2 == 1 { Symmetry::Skew } else { Symmetry::Symmetric };
            Some(InvariantForm::new(g, symmetry)?)
        }
        None => None,
    };
    Representation::new(rep.algebra_arc().clone(), matrices, form)
}

/// `Sym^k V` on the monomial basis `e_{i1}⋯e_{ik}` (`i1 ≤ … ≤ ik`, lexicographic).
/// The induced form is `(e_I, e_J) = per B[I,J]`.
pub fn sym_power(rep: &Representation, k: usize) -> Result<Representation> {
    power(rep, k, true)
}

/// `Λ^k V` on `e_{i1}∧⋯∧e_{ik}` (`i1 < … < ik`, lexicographic), induced form
/// `det B[I,J]`.
pub fn ext_power(rep: &Representation, k: usize) -> Result<Representation> {
    power(rep, k, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2(field: Field) -> Arc<LieAlgebra> {
        let basis = [
            Matrix::from_ints(&[&[0, 0], &[1, 0]], field),
            Matrix::from_ints(&[&[1, 0], &[0, -1]], field),
            Matrix::from_ints(&[&[0, 1], &[0, 0]], field),
        ];
        Arc::new(LieAlgebra::from_matrix_basis(&basis, field).unwrap())
    }

    fn defining(field: Field) -> Representation {
        let alg = sl2(field);
        let m = vec![
            Matrix::from_ints(&[&[0, 0], &[1, 0]], field),
            Matrix::from_ints(&[&[1, 0], &[0, -1]], field),
            Matrix::from_ints(&[&[0, 1], &[0, 0]], field),
        ];
        let form = InvariantForm::new(Matrix::from_ints(&[&[0, 1], &[-1, 0]], field), Symmetry::Skew).unwrap();
        Representation::new(alg, m, Some(form)).unwrap()
    }

    #[test]
    fn multiset_order() {
        assert_eq!(multisets(2, 2, true), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 2, false), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn sym3_is_skew() {
        let s3 = sym_power(&defining(Field::QI), 3).unwrap();
        assert_eq!(s3.dim(), 4);
        assert_eq!(s3.form().unwrap().symmetry, Symmetry::Skew);
        assert!(s3.is_irreducible().unwrap());
        assert_eq!(s3.invariant_bilinear_forms().dim(), 1);
    }

    #[test]
    fn tensor_square_invariants() {
        let v = defining(Field::QI);
        let vv = tensor(&v, &v).unwrap();
        assert_eq!(vv.invariants().dim(), 1);
        assert_eq!(vv.form().unwrap().symmetry, Symmetry::Symmetric);
        let sum = direct_sum(&v, &v).unwrap();
        assert_eq!(sum.commutant().dim(), 4);
        assert!(!sum.is_irreducible().unwrap());
    }

    #[test]
    fn external_tensor_form_is_symmetric() {
        let v = defining(Field::QI);
        let t = external_tensor(&v, &v).unwrap();
        assert_eq!((t.dim(), t.algebra_dim()), (4, 6));
        assert_eq!(t.form().unwrap().symmetry, Symmetry::Symmetric);
        assert!(t.is_irreducible().unwrap());
    }

    #[test]
    fn exterior_square_of_plane() {
        let e2 = ext_power(&defining(Field::Q), 2).unwrap();
        assert_eq!(e2.dim(), 1);
        assert!(e2.matrices().iter().all(Matrix::is_zero));
    }

    #[test]
    fn dual_keeps_form() {
        let v = defining(Field::QI);
        let d = dual(&v).unwrap();
        assert_eq!(d.form().unwrap().symmetry, Symmetry::Skew);
        assert_eq!(v.hom_space(&d).unwrap().dim(), 1);
    }
}

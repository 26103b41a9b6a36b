use super::spaces::{p_value, r_value, CurvatureSpace, WeakCurvatureSpace};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::liealg::{self, Representation};

/// Checks that `T + T*` lies in `R(so(V))`, where
/// `T(X,Y) = S(X)(Y) − S(Y)(X)` and `(T*(X,Y)Z, W) = (T(Z,W)X, Y)`.
/// `s[i]` is `S(e_i)`, each of which must lie in `P(h)`.
pub fn star_lemma_check(ps: &WeakCurvatureSpace, s: &[Vec<Scalar>]) -> Result<bool> {
    let rep = &ps.rep;
    let n = rep.dim();
    let d = rep.algebra_dim();
    let f = rep.field();
    if s.len() != n {
        return Err(Error::DimensionMismatch(format!("S needs {n} values, got {}", s.len())));
    }
    for v in s {
        if !ps.contains(v)? {
            return Err(Error::NotInSpace("P(h)".into()));
        }
    }
    let b = &rep.require_form()?.matrix;
    let b_inv_t = b.inverse().ok_or_else(|| Error::InvalidForm("form is degenerate".into()))?.transpose();

    let t: Vec<Vec<Matrix>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let coords: Vec<Scalar> =
                        p_value(&s[i], d, j).iter().zip(p_value(&s[j], d, i)).map(|(x, y)| x - y).collect();
                    rep.image(&coords)
                })
                .collect()
        })
        .collect();
    // N_{ij}[k][l] = (T(k,l) e_i, e_j) = (T(k,l)ᵀ B)[i][j]
    let tb: Vec<Vec<Matrix>> = t.iter().map(|row| row.iter().map(|m| &m.transpose() * b).collect()).collect();
    let total: Vec<Vec<Matrix>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let nmat = Matrix::from_fn(n, n, f, |k, l| tb[k][l].get(i, j).clone());
                    let star = &b_inv_t * &nmat.transpose();
                    &t[i][j] + &star
                })
                .collect()
        })
        .collect();

    let as_r = |i: usize, j: usize| &total[i][j];
    for i in 0..n {
        for j in 0..n {
            let m = as_r(i, j);
            if &-m != as_r(j, i) {
                return Ok(false);
            }
            if !(&(&m.transpose() * b) + &(b * m)).is_zero() {
                return Ok(false);
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for out in 0..n {
                    let v = as_r(i, j).get(out, k) + as_r(j, k).get(out, i) + as_r(k, i).get(out, j);
                    if !v.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn spans_algebra(rep: &Representation, values: Vec<Vec<Scalar>>) -> Result<bool> {
    let d = rep.algebra_dim();
    Ok(Subspace::span(d, rep.field(), &values)?.dim() == d)
}

/// Berger test: `span{R(X,Y)} = h`.
pub fn spanned_by_r_images(rs: &CurvatureSpace) -> Result<bool> {
    let n = rs.rep.dim();
    let d = rs.rep.algebra_dim();
    let f = rs.rep.field();
    let mut values = Vec::new();
    for r in rs.space.basis() {
        for (i, j) in super::spaces::pairs(n) {
            values.push(r_value(r, n, d, i, j, f));
        }
    }
    spans_algebra(&rs.rep, values)
}

/// Weak-Berger test: `span{P(X)} = h`.
pub fn spanned_by_p_images(ps: &WeakCurvatureSpace) -> Result<bool> {
    let n = ps.rep.dim();
    let d = ps.rep.algebra_dim();
    let values = ps.space.basis().iter().flat_map(|p| (0..n).map(move |i| p_value(p, d, i).to_vec())).collect();
    spans_algebra(&ps.rep, values)
}

/// `dim hom_h(V, V ⊗ h)`: multiplicity of `V` in `V ⊗ h`.
pub fn standard_multiplicity(rep: &Representation) -> Result<usize> {
    if rep.field() != Field::QI {
        return Err(Error::Precondition("standard multiplicity needs the field Q(i)".into()));
    }
    if !rep.is_irreducible()? {
        return Err(Error::Precondition("standard multiplicity needs an irreducible module".into()));
    }
    let ad = liealg::adjoint(rep.algebra_arc().clone())?.with_form(None)?;
    let plain = rep.with_form(None)?;
    let target = liealg::tensor(&plain, &ad)?;
    Ok(plain.hom_space(&target)?.dim())
}

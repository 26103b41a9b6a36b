use serde::Serialize;

use super::spaces::{p_value, r_value, CurvatureSpace, WeakCurvatureSpace};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, Field, LinearSystem, Matrix, Scalar, Subspace};
use crate::liealg::Representation;

/// `Ric(R)(X, Y) = tr(Z ↦ R(Z, X)Y)` as the matrix `Ric[x][y]`.
pub fn ricci(rep: &Representation, r: &[Scalar]) -> Matrix {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let f = rep.field();
    let mut out = Matrix::zeros(n, n, f);
    for z in 0..n {
        for x in 0..n {
            let m = rep.image(&r_value(r, n, d, z, x, f));
            for y in 0..n {
                let v = out.get(x, y) + m.get(z, y);
                out.set(x, y, v);
            }
        }
    }
    out
}

/// `tRic(P) = Σ_i P(e_i) f_i` where `(e_i, f_j) = δ_ij`.
pub fn tric(rep: &Representation, p: &[Scalar]) -> Result<Vec<Scalar>> {
    let form = rep.require_form()?;
    let n = rep.dim();
    let d = rep.algebra_dim();
    let dual = form.matrix.inverse().ok_or_else(|| Error::InvalidForm("form is degenerate".into()))?;
    let mut out = vec![Scalar::zero(rep.field()); n];
    for i in 0..n {
        let v = rep.image(p_value(p, d, i)).mul_vec(&dual.column(i));
        axpy(&mut out, &Scalar::one(rep.field()), &v);
    }
    Ok(out)
}

/// Linear map `elements → F^k` applied to a subspace basis; returns the
/// kernel as a subspace of the same ambient space.
fn kernel_within(space: &Subspace, mut map: impl FnMut(&[Scalar]) -> Result<Vec<Scalar>>) -> Result<Subspace> {
    let images = space.basis().iter().map(|b| map(b)).collect::<Result<Vec<_>>>()?;
    let k = images.first().map_or(0, Vec::len);
    let mut sys = LinearSystem::new(space.dim(), space.field());
    for row in 0..k {
        sys.push_sparse(images.iter().enumerate().map(|(t, v)| (t, v[row].clone())));
    }
    let coords = sys.kernel();
    let vectors: Vec<Vec<Scalar>> = coords.basis().iter().map(|c| space.combine(c)).collect();
    Subspace::span(space.ambient(), space.field(), &vectors)
}

#[derive(Clone, Debug, Serialize)]
pub struct RDecomposition {
    #[serde(skip)]
    pub r0: Subspace,
    #[serde(skip)]
    pub r1: Subspace,
    pub r_dim: usize,
    pub r0_dim: usize,
    pub r1_dim: usize,
    pub r_prime_dim: usize,
}

/// `A·R` for `A = b_a`: `(A·R)(X,Y) = [A, R(X,Y)] − R(AX, Y) − R(X, AY)`.
pub fn act_on_r(rep: &Representation, a: usize, r: &[Scalar]) -> Vec<Scalar> {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let f = rep.field();
    let m = rep.matrix(a);
    let alg = rep.algebra();
    let mut unit = vec![Scalar::zero(f); d];
    if d > 0 {
        unit[a] = Scalar::one(f);
    }
    super::spaces::r_from_fn(n, d, |i, j| {
        let mut v = alg.bracket(&unit, &r_value(r, n, d, i, j, f));
        for s in 0..n {
            let c = m.get(s, i);
            if !c.is_zero() {
                axpy(&mut v, &-c, &r_value(r, n, d, s, j, f));
            }
            let c = m.get(s, j);
            if !c.is_zero() {
                axpy(&mut v, &-c, &r_value(r, n, d, i, s, f));
            }
        }
        v
    })
}

/// `R₀` = Ricci-flat part, `R₁` = `h`-invariant part, `R′` = the rest.
pub fn decompose_r(rs: &CurvatureSpace) -> Result<RDecomposition> {
    let rep = &rs.rep;
    let r0 = kernel_within(&rs.space, |r| Ok(ricci(rep, r).entries().to_vec()))?;
    let r1 = kernel_within(&rs.space, |r| {
        Ok((0..rep.algebra_dim()).flat_map(|a| act_on_r(rep, a, r)).collect())
    })?;
    let joint = r0.sum(&r1)?.dim();
    Ok(RDecomposition {
        r_dim: rs.dim(),
        r0_dim: r0.dim(),
        r1_dim: r1.dim(),
        r_prime_dim: rs.dim() - joint,
        r0,
        r1,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PDecomposition {
    #[serde(skip)]
    pub p0: Subspace,
    /// Complement of `P₀` under `⟨P,Q⟩ = Σ tr(P(e_i)Q(e_i)ᵀ)`; only over Q.
    #[serde(skip)]
    pub p1: Option<Subspace>,
    pub p_dim: usize,
    pub p0_dim: usize,
    pub p1_dim: usize,
}

/// `⟨P, Q⟩ = Σ_i tr(ρ(P(e_i)) ρ(Q(e_i))ᵀ)`.
pub fn transpose_pairing(rep: &Representation, p: &[Scalar], q: &[Scalar]) -> Scalar {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let mut acc = Scalar::zero(rep.field());
    for i in 0..n {
        let a = rep.image(p_value(p, d, i));
        let b = rep.image(p_value(q, d, i));
        for (x, y) in a.entries().iter().zip(b.entries()) {
            acc += &(x * y);
        }
    }
    acc
}

pub fn decompose_p(ps: &WeakCurvatureSpace) -> Result<PDecomposition> {
    let rep = &ps.rep;
    let p0 = kernel_within(&ps.space, |p| tric(rep, p))?;
    let p1 = if rep.field() == Field::Q {
        let gens: Vec<&Vec<Scalar>> = p0.basis().iter().collect();
        Some(kernel_within(&ps.space, |p| Ok(gens.iter().map(|g| transpose_pairing(rep, p, g)).collect()))?)
    } else {
        None
    };
    let out = PDecomposition { p_dim: ps.dim(), p0_dim: p0.dim(), p1_dim: ps.dim() - p0.dim(), p0, p1 };
    if let Some(p1) = &out.p1 {
        if p1.dim() != out.p1_dim {
            return Err(Error::Consistency("transpose pairing is degenerate on P(h)".into()));
        }
    }
    Ok(out)
}

/// `τ(X ⊗ R) = R(X, ·)`.
pub fn tau_raw(rep: &Representation, x: &[Scalar], r: &[Scalar]) -> Vec<Scalar> {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let f = rep.field();
    let mut out = vec![Scalar::zero(f); n * d];
    for j in 0..n {
        let slot = &mut out[j * d..(j + 1) * d];
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                axpy(slot, xi, &r_value(r, n, d, i, j, f));
            }
        }
    }
    out
}

/// `τ(X ⊗ R)`, checking `R ∈ R(h)` and `τ(X ⊗ R) ∈ P(h)`.
pub fn tau(rs: &CurvatureSpace, ps: &WeakCurvatureSpace, x: &[Scalar], r: &[Scalar]) -> Result<Vec<Scalar>> {
    if !rs.contains(r)? {
        return Err(Error::NotInSpace("R(h)".into()));
    }
    let p = tau_raw(&rs.rep, x, r);
    if !ps.contains(&p)? {
        return Err(Error::Consistency("τ(X⊗R) left P(h)".into()));
    }
    Ok(p)
}

/// `span τ(e_i ⊗ R)` over basis vectors and the generators of `sub ⊆ R(h)`.
pub fn tau_image(rs: &CurvatureSpace, ps: &WeakCurvatureSpace, sub: &Subspace) -> Result<Subspace> {
    let n = rs.rep.dim();
    let f = rs.rep.field();
    let mut images = Vec::new();
    for r in sub.basis() {
        for i in 0..n {
            let mut x = vec![Scalar::zero(f); n];
            x[i] = Scalar::one(f);
            images.push(tau(rs, ps, &x, r)?);
        }
    }
    Subspace::span(ps.space.ambient(), f, &images)
}

/// Matrix of `X∧Y : Z ↦ (X,Z)Y − (Y,Z)X`.
pub fn wedge(rep: &Representation, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
    let b = &rep.require_form()?.matrix;
    let n = rep.dim();
    let f = rep.field();
    let bx = b.transpose().mul_vec(x);
    let by = b.transpose().mul_vec(y);
    Ok(Matrix::from_fn(n, n, f, |s, z| &(&y[s] * &bx[z]) - &(&x[s] * &by[z])))
}

/// Orthogonal projection of a matrix onto `ρ(h)` for the trace form `tr(MN)`.
pub fn project_to_h(rep: &Representation, m: &Matrix) -> Result<Vec<Scalar>> {
    let d = rep.algebra_dim();
    let f = rep.field();
    let mats = rep.matrices();
    let trace_prod = |a: &Matrix, b: &Matrix| -> Scalar {
        let mut acc = Scalar::zero(f);
        for i in 0..a.nrows() {
            for (k, v) in a.row(i).iter().enumerate() {
                if !v.is_zero() {
                    let w = b.get(k, i);
                    if !w.is_zero() {
                        acc += &(v * w);
                    }
                }
            }
        }
        acc
    };
    let gram = Matrix::from_fn(d, d, f, |a, b| trace_prod(&mats[a], &mats[b]));
    let rhs: Vec<Scalar> = mats.iter().map(|ma| trace_prod(ma, m)).collect();
    if gram.rank() != d {
        return Err(Error::Precondition("trace form is degenerate on h; projection undefined".into()));
    }
    gram.solve(&rhs)?.ok_or_else(|| Error::Consistency("projection system inconsistent".into()))
}

/// `id_h(X, Y) = pr_h(X∧Y)` as an element of `Λ²V*⊗h`.
pub fn identity_tensor(rep: &Representation) -> Result<Vec<Scalar>> {
    let n = rep.dim();
    let f = rep.field();
    let unit = |i: usize| (0..n).map(|k| Scalar::from_int((k == i) as i64, f)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for (i, j) in super::spaces::pairs(n) {
        out.extend(project_to_h(rep, &wedge(rep, &unit(i), &unit(j))?)?);
    }
    Ok(out)
}

/// `pr_h(X∧·)`; errors if the result is not in `P(h)`.
pub fn canonical_p1_candidate(ps: &WeakCurvatureSpace, x: &[Scalar]) -> Result<Vec<Scalar>> {
    let rep = &ps.rep;
    let n = rep.dim();
    let f = rep.field();
    let mut out = Vec::with_capacity(n * rep.algebra_dim());
    for j in 0..n {
        let ej: Vec<Scalar> = (0..n).map(|k| Scalar::from_int((k == j) as i64, f)).collect();
        out.extend(project_to_h(rep, &wedge(rep, x, &ej)?)?);
    }
    if !ps.contains(&out)? {
        return Err(Error::NotInSpace("P(h)".into()));
    }
    Ok(out)
}

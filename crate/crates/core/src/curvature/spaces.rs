use crate::error::{Error, Result};
use crate::exactlin::{Equation, Field, LinearSystem, Matrix, Scalar, Subspace};
use crate::liealg::Representation;

/// Index of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
}

/// `R(e_i, e_j)` in algebra coordinates, with `R(e_j, e_i) = −R(e_i, e_j)`.
pub fn r_value(r: &[Scalar], n: usize, d: usize, i: usize, j: usize, field: Field) -> Vec<Scalar> {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => vec![Scalar::zero(field); d],
        Less => r[pair_index(n, i, j) * d..][..d].to_vec(),
        Greater => r[pair_index(n, j, i) * d..][..d].iter().map(|v| -v).collect(),
    }
}

/// Builds an element of `Λ²V*⊗h` from its values on pairs `i < j`.
pub fn r_from_fn(n: usize, d: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2 * d);
    for (i, j) in pairs(n) {
        let v = f(i, j);
        assert_eq!(v.len(), d);
        out.extend(v);
    }
    out
}

/// `P(e_i)` in algebra coordinates.
pub fn p_value(p: &[Scalar], d: usize, i: usize) -> &[Scalar] {
    &p[i * d..(i + 1) * d]
}

/// Space of weak curvature tensors `P ∈ V*⊗h` with
/// `(P(X)Y,Z) + (P(Y)Z,X) + (P(Z)X,Y) = 0`. Coordinates `i·dim h + a`.
#[derive(Clone, Debug)]
pub struct WeakCurvatureSpace {
    pub rep: Representation,
    pub space: Subspace,
}

/// Algebraic curvature tensors in `Λ²V*⊗h` satisfying the first Bianchi
/// identity. Coordinates `pair_index(i,j)·dim h + a`.
#[derive(Clone, Debug)]
pub struct CurvatureSpace {
    pub rep: Representation,
    pub space: Subspace,
}

/// `S ∈ V*⊗R(h)` with `S_X(Y,Z) + S_Y(Z,X) + S_Z(X,Y) = 0`. Coordinates
/// `i·dim R(h) + t`, where `t` runs over the basis of the curvature space.
#[derive(Clone, Debug)]
pub struct CovDerivSpace {
    pub space: Subspace,
    pub curvature_dim: usize,
}

impl WeakCurvatureSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `(P(X)Y, Z) + (P(Y)Z, X) + (P(Z)X, Y) = 0` checked with matrices on all triples.
    pub fn satisfies_identity(rep: &Representation, p: &[Scalar]) -> Result<bool> {
        let form = rep.require_form()?;
        let n = rep.dim();
        let d = rep.algebra_dim();
        let mats: Vec<Matrix> = (0..n).map(|i| &rep.image(p_value(p, d, i)).transpose() * &form.matrix).collect();
        // mats[i][j][k] = (P(e_i) e_j, e_k)
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = mats[i].get(j, k) + mats[j].get(k, i) + mats[k].get(i, j);
                    if !s.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn verify(&self) -> Result<bool> {
        for b in self.space.basis() {
            if !Self::satisfies_identity(&self.rep, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains(&self, p: &[Scalar]) -> Result<bool> {
        self.space.contains(p)
    }
}

impl CurvatureSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn satisfies_bianchi(rep: &Representation, r: &[Scalar]) -> bool {
        let n = rep.dim();
        let d = rep.algebra_dim();
        let f = rep.field();
        let value = |i, j| rep.image(&r_value(r, n, d, i, j, f));
        for i in 0..n {
            for j in (i + 1)..n {
                let rij = value(i, j);
                for k in (j + 1)..n {
                    let (rjk, rki) = (value(j, k), value(k, i));
                    for s in 0..n {
                        let t = rij.get(s, k) + rjk.get(s, i) + rki.get(s, j);
                        if !t.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn verify(&self) -> bool {
        self.space.basis().iter().all(|b| Self::satisfies_bianchi(&self.rep, b))
    }

    pub fn contains(&self, r: &[Scalar]) -> Result<bool> {
        self.space.contains(r)
    }
}

impl CovDerivSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `C_a = ρ(b_a)ᵀ·B`, so that `(ρ_a e_j, e_k) = C_a[j][k]`.
fn form_images(rep: &Representation) -> Result<Vec<Matrix>> {
    let form = rep.require_form()?;
    Ok(rep.matrices().iter().map(|m| &m.transpose() * &form.matrix).collect())
}

/// Weak curvature space `P(h)`.
pub fn pspace(rep: &Representation) -> Result<WeakCurvatureSpace> {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let c = form_images(rep)?;
    let mut sys = LinearSystem::new(n * d, rep.field());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut eq = Equation::new();
                for (a, ca) in c.iter().enumerate() {
                    eq.add(i * d + a, ca.get(j, k));
                    eq.add(j * d + a, ca.get(k, i));
                    eq.add(k * d + a, ca.get(i, j));
                }
                sys.push(eq);
            }
        }
    }
    Ok(WeakCurvatureSpace { rep: rep.clone(), space: sys.kernel() })
}

/// Curvature space `R(h)`: kernel of the Bianchi system on `Λ²V*⊗h`.
pub fn rspace(rep: &Representation) -> CurvatureSpace {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let np = n * n.saturating_sub(1) / 2;
    let mut sys = LinearSystem::new(np * d, rep.field());
    let mats = rep.matrices();
    // Bianchi is alternating in (X, Y, Z) once R is antisymmetric, so i < j < k suffices.
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let (pij, pjk, pik) = (pair_index(n, i, j), pair_index(n, j, k), pair_index(n, i, k));
                for s in 0..n {
                    let mut eq = Equation::new();
                    for (a, m) in mats.iter().enumerate() {
                        eq.add(pij * d + a, m.get(s, k));
                        eq.add(pjk * d + a, m.get(s, i));
                        // R(e_k, e_i) = −R(e_i, e_k)
                        eq.sub(pik * d + a, m.get(s, j));
                    }
                    sys.push(eq);
                }
            }
        }
    }
    CurvatureSpace { rep: rep.clone(), space: sys.kernel() }
}

/// Space `R∇(h)` of algebraic covariant derivatives.
pub fn rnabla_space(rs: &CurvatureSpace) -> CovDerivSpace {
    let n = rs.rep.dim();
    let d = rs.rep.algebra_dim();
    let f = rs.rep.field();
    let basis = rs.space.basis();
    let m = basis.len();
    let mut sys = LinearSystem::new(n * m, f);
    let value = |t: usize, i: usize, j: usize| r_value(&basis[t], n, d, i, j, f);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut eqs = vec![Equation::new(); d];
                for t in 0..m {
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (a, v) in value(t, y, z).iter().enumerate() {
                            eqs[a].add(x * m + t, v);
                        }
                    }
                }
                for eq in eqs {
                    sys.push(eq);
                }
            }
        }
    }
    CovDerivSpace { space: sys.kernel(), curvature_dim: m }
}

/// First prolongation `h^(1) = {u ∈ V*⊗h : u(X)Y = u(Y)X}`.
pub fn first_prolongation(rep: &Representation) -> Subspace {
    let n = rep.dim();
    let d = rep.algebra_dim();
    let mut sys = LinearSystem::new(n * d, rep.field());
    for i in 0..n {
        for j in (i + 1)..n {
            for s in 0..n {
                let mut eq = Equation::new();
                for (a, m) in rep.matrices().iter().enumerate() {
                    eq.add(i * d + a, m.get(s, j));
                    eq.sub(j * d + a, m.get(s, i));
                }
                sys.push(eq);
            }
        }
    }
    sys.kernel()
}

/// Same space as [`rspace`], computed as `{S ∈ V*⊗P(h) : S(X)(Y) = −S(Y)(X)}`
/// and mapped into `Λ²V*⊗h` coordinates.
pub fn rspace_via_pspace(ps: &WeakCurvatureSpace) -> Result<Subspace> {
    let n = ps.rep.dim();
    let d = ps.rep.algebra_dim();
    let f = ps.rep.field();
    let basis = ps.space.basis();
    let m = basis.len();
    let mut sys = LinearSystem::new(n * m, f);
    for i in 0..n {
        for j in i..n {
            let mut eqs = vec![Equation::new(); d];
            for t in 0..m {
                for a in 0..d {
                    eqs[a].add(i * m + t, &basis[t][j * d + a]);
                    eqs[a].add(j * m + t, &basis[t][i * d + a]);
                }
            }
            for eq in eqs {
                sys.push(eq);
            }
        }
    }
    let kernel = sys.kernel();
    let np = n * n.saturating_sub(1) / 2;
    let images: Vec<Vec<Scalar>> = kernel
        .basis()
        .iter()
        .map(|s| {
            r_from_fn(n, d, |i, j| {
                let mut v = vec![Scalar::zero(f); d];
                for t in 0..m {
                    crate::exactlin::axpy(&mut v, &s[i * m + t], &basis[t][j * d..(j + 1) * d]);
                }
                v
            })
        })
        .collect();
    if images.iter().any(|v| v.len() != np * d) {
        return Err(Error::Consistency("curvature tensor of wrong size".into()));
    }
    Subspace::span(np * d, f, &images)
}

//! Concrete representations with their invariant forms attached.
//!
//! Conventions: so(n) has basis `E_ij − E_ji` (i < j, lexicographic) and the
//! identity form; sp(2m) preserves `Ω = [[0, I], [−I, 0]]`; sl₂ has basis
//! `(F, H, E)` with `F = [[0,0],[1,0]]`, `H = diag(1,−1)`, `E = [[0,1],[0,0]]`
//! and form `ω(e₁, e₂) = 1`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::liealg::{self, InvariantForm, LieAlgebra, Representation, Symmetry};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub rep: Representation,
    pub note: String,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, rep: Representation, note: impl Into<String>) -> Self {
        CatalogEntry { name: name.into(), rep, note: note.into() }
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

fn unit(n: usize, i: usize, j: usize, field: Field) -> Matrix {
    let mut m = Matrix::zeros(n, n, field);
    m.set(i, j, Scalar::one(field));
    m
}

fn matrix_rep(basis: Vec<Matrix>, labels: Vec<String>, form: InvariantForm, field: Field) -> Result<Representation> {
    let algebra = LieAlgebra::from_matrix_basis(&basis, field)?.with_labels(labels);
    Representation::new(Arc::new(algebra), basis, Some(form))
}

/// so(n) on `F^n` with the identity form.
pub fn so(n: usize, field: Field) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::Precondition(format!("so(n) needs n ≥ 2, got {n}")));
    }
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(&unit(n, i, j, field) - &unit(n, j, i, field));
            labels.push(format!("E{}{}-E{}{}", i + 1, j + 1, j + 1, i + 1));
        }
    }
    let form = InvariantForm::new(Matrix::identity(n, field), Symmetry::Symmetric)?;
    Ok(CatalogEntry::new(format!("so({n})"), matrix_rep(basis, labels, form, field)?, "orthogonal algebra, defining module"))
}

/// `Ω = [[0, I_m], [−I_m, 0]]`.
pub fn omega(m: usize, field: Field) -> Matrix {
    Matrix::from_fn(2 * m, 2 * m, field, |i, j| {
        if j == i + m {
            Scalar::one(field)
        } else if i == j + m {
            -Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

/// sp(2m) on `F^{2m}`, basis `−Ω·S` for the symmetric units `S` (`E_ii`, or
/// `E_ij + E_ji` for i < j).
pub fn sp(two_m: usize, field: Field) -> Result<CatalogEntry> {
    if two_m < 2 || two_m % 2 == 1 {
        return Err(Error::Precondition(format!("sp(2m) needs an even size ≥ 2, got {two_m}")));
    }
    let n = two_m;
    let om = omega(n / 2, field);
    let minus_om = -&om;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s = if i == j { unit(n, i, i, field) } else { &unit(n, i, j, field) + &unit(n, j, i, field) };
            basis.push(&minus_om * &s);
            labels.push(format!("S{}{}", i + 1, j + 1));
        }
    }
    let form = InvariantForm::new(om, Symmetry::Skew)?;
    Ok(CatalogEntry::new(format!("sp({n})"), matrix_rep(basis, labels, form, field)?, "symplectic algebra, defining module"))
}

/// sl₂ as abstract algebra with basis (F, H, E).
pub fn sl2_algebra(field: Field) -> Arc<LieAlgebra> {
    let basis = sl2_matrices(field);
    let algebra = LieAlgebra::from_matrix_basis(&basis, field).expect("sl2 basis is independent");
    Arc::new(algebra.with_labels(vec!["F".into(), "H".into(), "E".into()]))
}

fn sl2_matrices(field: Field) -> Vec<Matrix> {
    vec![
        Matrix::from_ints(&[&[0, 0], &[1, 0]], field),
        Matrix::from_ints(&[&[1, 0], &[0, -1]], field),
        Matrix::from_ints(&[&[0, 1], &[0, 0]], field),
    ]
}

/// Defining module `F²` of sl₂ with `ω = [[0,1],[−1,0]]`.
pub fn sl2(field: Field) -> CatalogEntry {
    let form = InvariantForm::new(Matrix::from_ints(&[&[0, 1], &[-1, 0]], field), Symmetry::Skew).expect("ω");
    let rep = Representation::new(sl2_algebra(field), sl2_matrices(field), Some(form)).expect("defining sl2");
    CatalogEntry::new("sl2", rep, "defining module of sl2")
}

/// `Sym^k F²` on the monomials `x^k, x^{k−1}y, …, y^k`.
pub fn sl2_irrep(k: usize, field: Field) -> Result<CatalogEntry> {
    if k < 1 {
        return Err(Error::Precondition("sl2 irrep needs k ≥ 1".into()));
    }
    let rep = liealg::sym_power(&sl2(field).rep, k)?;
    Ok(CatalogEntry::new(format!("sl2:sym({k})"), rep, "irreducible sl2 module of dimension k+1"))
}

/// `sl₂ ⊕ k` on `F² ⊗ F^{2m}` (index `a·2m + i`) with the form `ω ⊗ Ω`.
pub fn sl2_tensor_symplectic(k_entry: &CatalogEntry) -> Result<CatalogEntry> {
    let form = k_entry.rep.require_form()?;
    if form.symmetry != Symmetry::Skew {
        return Err(Error::InvalidForm("sl2 ⊗ k needs a skew form on the k-module".into()));
    }
    let field = k_entry.rep.field();
    let rep = liealg::external_tensor(&sl2(field).rep, &k_entry.rep)?;
    Ok(CatalogEntry::new(format!("sl2xk({})", k_entry.name), rep, "sl2 ⊕ k on C² ⊗ C^{2m}"))
}

/// so(n₁) ⊕ so(n₂) on `F^{n₁} ⊗ F^{n₂}`.
pub fn so_pair_tensor(n1: usize, n2: usize, field: Field) -> Result<CatalogEntry> {
    if n1 < 3 || n2 < 3 {
        return Err(Error::Precondition(format!("so pair needs n₁, n₂ ≥ 3, got ({n1}, {n2})")));
    }
    let rep = liealg::external_tensor(&so(n1, field)?.rep, &so(n2, field)?.rep)?;
    Ok(CatalogEntry::new(format!("tensor(so({n1}),so({n2}))"), rep, "so ⊕ so on the tensor product"))
}

/// sp(2m₁) ⊕ sp(2m₂) on `F^{2m₁} ⊗ F^{2m₂}`; the product form is symmetric.
pub fn sp_pair_tensor(n1: usize, n2: usize, field: Field) -> Result<CatalogEntry> {
    let rep = liealg::external_tensor(&sp(n1, field)?.rep, &sp(n2, field)?.rep)?;
    Ok(CatalogEntry::new(format!("tensor(sp({n1}),sp({n2}))"), rep, "sp ⊕ sp on the tensor product"))
}

/// The zero algebra acting on `F^n` with the identity form.
pub fn zero(n: usize, field: Field) -> CatalogEntry {
    let algebra = Arc::new(LieAlgebra::abelian(0, field));
    let form = InvariantForm::new(Matrix::identity(n, field), Symmetry::Symmetric).expect("identity form");
    let rep = Representation::new(algebra, Vec::new(), Some(form)).expect("zero algebra");
    CatalogEntry::new(format!("zero({n})"), rep, "zero subalgebra")
}

/// sp(6) on the 14-dimensional kernel of `Λ³F⁶ → F⁶`,
/// `a∧b∧c ↦ Ω(a,b)c − Ω(a,c)b + Ω(b,c)a`.
pub fn sp6_lambda30(field: Field) -> Result<CatalogEntry> {
    let base = sp(6, field)?;
    let wedge3 = liealg::ext_power(&base.rep, 3)?;
    let om = omega(3, field);
    let triples = liealg::functors::multisets(6, 3, false);
    let contraction = Matrix::from_fn(6, triples.len(), field, |r, col| {
        let t = &triples[col];
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut v = Scalar::zero(field);
        if r == c {
            v += om.get(a, b);
        }
        if r == b {
            v -= om.get(a, c);
        }
        if r == a {
            v += om.get(b, c);
        }
        v
    });
    let kernel: Subspace = contraction.kernel()?;
    let rep = wedge3.subrepresentation(&kernel)?;
    Ok(CatalogEntry::new("sp6:lambda30", rep, "sp(6) on the primitive part of Λ³C⁶"))
}

/// Resolves a catalog name. Grammar (whitespace ignored):
///
/// ```text
/// spec  := so(n) | sp(n) | sl2 | sl2:sym(k) | sl2:symK [in sp(n)] | zero(n)
///        | sp6:lambda30 | tensor(spec,spec) | oplus(spec,spec) | sl2xk(spec)
/// ```
///
/// `tensor` and `oplus` combine two entries into the direct-sum algebra.
pub fn resolve(spec: &str, field: Field) -> Result<CatalogEntry> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut entry = resolve_compact(&compact, field)?;
    entry.name = compact;
    Ok(entry)
}

fn bad(spec: &str) -> Error {
    Error::Parse(format!("unknown catalog spec `{spec}`"))
}

fn int_arg(s: &str, spec: &str) -> Result<usize> {
    s.parse::<usize>().map_err(|_| bad(spec))
}

fn split_top(args: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&args[..i], &args[i + 1..])),
            _ => {}
        }
    }
    None
}

fn call<'a>(spec: &'a str, name: &str) -> Option<&'a str> {
    spec.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
}

fn resolve_compact(spec: &str, field: Field) -> Result<CatalogEntry> {
    if let Some(rest) = spec.strip_prefix("sl2:sym") {
        let (k_part, target) = match rest.split_once("insp(") {
            Some((k, t)) => (k, Some(t.strip_suffix(')').ok_or_else(|| bad(spec))?)),
            None => (rest, None),
        };
        let k_str = k_part.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(k_part);
        let k = int_arg(k_str, spec)?;
        if let Some(t) = target {
            let n = int_arg(t, spec)?;
            if n != k + 1 || k % 2 == 0 {
                return Err(Error::Precondition(format!("Sym^{k} of sl2 does not sit in sp({n})")));
            }
        }
        return sl2_irrep(k, field);
    }
    match spec {
        "sl2" => return Ok(sl2(field)),
        "sp6:lambda30" => return sp6_lambda30(field),
        _ => {}
    }
    if let Some(a) = call(spec, "so") {
        return so(int_arg(a, spec)?, field);
    }
    if let Some(a) = call(spec, "sp") {
        return sp(int_arg(a, spec)?, field);
    }
    if let Some(a) = call(spec, "zero") {
        return Ok(zero(int_arg(a, spec)?, field));
    }
    if let Some(a) = call(spec, "sl2xk") {
        return sl2_tensor_symplectic(&resolve_compact(a, field)?);
    }
    if let Some(a) = call(spec, "tensor") {
        let (x, y) = split_top(a).ok_or_else(|| bad(spec))?;
        let (x, y) = (resolve_compact(x, field)?, resolve_compact(y, field)?);
        let rep = liealg::external_tensor(&x.rep, &y.rep)?;
        return Ok(CatalogEntry::new(spec, rep, "external tensor product"));
    }
    if let Some(a) = call(spec, "oplus") {
        let (x, y) = split_top(a).ok_or_else(|| bad(spec))?;
        let (x, y) = (resolve_compact(x, field)?, resolve_compact(y, field)?);
        let rep = liealg::external_sum(&x.rep, &y.rep)?;
        return Ok(CatalogEntry::new(spec, rep, "external direct sum"));
    }
    Err(bad(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_small() {
        let so2 = so(2, Field::Q).unwrap();
        assert_eq!(so2.rep.algebra_dim(), 1);
        let so3 = so(3, Field::Q).unwrap();
        assert!(so3.rep.algebra().check_jacobi());
        assert_eq!(so3.rep.algebra().killing_form(), Matrix::identity(3, Field::Q).scale(&Scalar::from(-2)));
        assert!(so(1, Field::Q).is_err());
    }

    #[test]
    fn sp_conventions() {
        let sp4 = sp(4, Field::QI).unwrap();
        assert_eq!(sp4.rep.algebra_dim(), 10);
        assert!(sp4.rep.is_irreducible().unwrap());
        assert!(sp4.rep.form().unwrap().entry(0, 2).is_one());
        let sp2 = sp(2, Field::QI).unwrap();
        assert!(sp2.rep.algebra().is_simple().unwrap());
        // Same matrix span as (F, H, E).
        let flat = |ms: &[Matrix]| ms.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>();
        let a = Subspace::span(4, Field::QI, &flat(sp2.rep.matrices())).unwrap();
        let b = Subspace::span(4, Field::QI, &flat(sl2(Field::QI).rep.matrices())).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sl2_irreps_forms() {
        for k in 1..=6 {
            let e = sl2_irrep(k, Field::QI).unwrap();
            assert_eq!(e.dim(), k + 1);
            let expect = if k % 2 == 1 { Symmetry::Skew } else { Symmetry::Symmetric };
            assert_eq!(e.rep.form().unwrap().symmetry, expect);
            assert_eq!(e.rep.invariant_bilinear_forms().dim(), 1);
            assert!(e.rep.is_irreducible().unwrap());
        }
    }

    #[test]
    fn symplectic_tensors() {
        let e = sl2_tensor_symplectic(&sp(4, Field::QI).unwrap()).unwrap();
        assert_eq!((e.dim(), e.rep.algebra_dim()), (8, 13));
        assert_eq!(e.rep.form().unwrap().symmetry, Symmetry::Symmetric);
        assert!(e.rep.is_irreducible().unwrap());
        let e = sl2_tensor_symplectic(&sl2_irrep(3, Field::QI).unwrap()).unwrap();
        assert_eq!((e.dim(), e.rep.algebra_dim()), (8, 6));
        assert!(sl2_tensor_symplectic(&so(3, Field::QI).unwrap()).is_err());
    }

    #[test]
    fn pair_tensors() {
        let a = so_pair_tensor(3, 3, Field::Q).unwrap();
        assert_eq!((a.rep.algebra_dim(), a.dim()), (6, 9));
        let b = sp_pair_tensor(2, 2, Field::Q).unwrap();
        assert_eq!((b.rep.algebra_dim(), b.dim()), (6, 4));
        assert_eq!(b.rep.form().unwrap().symmetry, Symmetry::Symmetric);
        let c = so_pair_tensor(3, 4, Field::Q).unwrap();
        assert_eq!((c.rep.algebra_dim(), c.dim()), (9, 12));
    }

    #[test]
    fn lambda30() {
        let e = sp6_lambda30(Field::QI).unwrap();
        assert_eq!(e.dim(), 14);
        assert_eq!(e.rep.form().unwrap().symmetry, Symmetry::Skew);
        assert!(e.rep.is_irreducible().unwrap());
    }

    #[test]
    fn names() {
        assert_eq!(resolve("so(4)", Field::Q).unwrap().dim(), 4);
        assert_eq!(resolve("sl2:sym5 in sp(6)", Field::QI).unwrap().dim(), 6);
        assert_eq!(resolve("sl2:sym(3)", Field::QI).unwrap().dim(), 4);
        assert!(resolve("sl2:sym4 in sp(5)", Field::QI).is_err());
        let t = resolve("tensor(so(3), so(3))", Field::Q).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(resolve("sl2xk(sl2:sym3)", Field::QI).unwrap().dim(), 8);
        assert_eq!(resolve("oplus(sl2,sl2)", Field::QI).unwrap().dim(), 4);
        assert!(resolve("g2", Field::Q).is_err());
    }
}

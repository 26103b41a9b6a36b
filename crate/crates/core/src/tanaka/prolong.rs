use serde::Serialize;

use super::graded::GradedLieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Equation, Field, LinearSystem, Matrix, Scalar, Subspace};
use crate::liealg::{LieAlgebra, Representation, Symmetry};

/// `C F ⊕ C^{2m} ⊕ (k ⊕ C H)` with `[X,Y] = Ω(X,Y)F`, `[A,X] = AX`,
/// `[H,X] = −X`, `[H,F] = −2F`.
///
/// Basis order: `F`, `X_1 … X_{2m}`, the basis of `k`, `H`.
#[derive(Clone, Debug)]
pub struct BaseGrading {
    pub graded: GradedLieAlgebra,
    pub omega: Matrix,
    /// `2m`.
    pub n: usize,
    /// `dim k`.
    pub r: usize,
}

pub fn build_base_grading(k_rep: &Representation) -> Result<BaseGrading> {
    let form = k_rep.require_form()?;
    if form.symmetry != Symmetry::Skew {
        return Err(Error::InvalidForm("base grading needs a skew form Ω".into()));
    }
    let n = k_rep.dim();
    let r = k_rep.algebra_dim();
    let f = k_rep.field();
    let dim = n + r + 2;
    let h = dim - 1;
    let x = |i: usize| 1 + i;
    let a = |i: usize| 1 + n + i;
    let mut c = vec![vec![vec![Scalar::zero(f); dim]; dim]; dim];
    let mut put = |i: usize, j: usize, k: usize, v: Scalar| {
        c[j][i][k] = -&v;
        c[i][j][k] = v;
    };
    for i in 0..n {
        for j in (i + 1)..n {
            put(x(i), x(j), 0, form.entry(i, j).clone());
        }
    }
    for (p, m) in k_rep.matrices().iter().enumerate() {
        for j in 0..n {
            for s in 0..n {
                if !m.get(s, j).is_zero() {
                    put(a(p), x(j), x(s), m.get(s, j).clone());
                }
            }
        }
        for q in (p + 1)..r {
            for (t, v) in k_rep.algebra().bracket_basis(p, q).iter().enumerate() {
                if !v.is_zero() {
                    put(a(p), a(q), a(t), v.clone());
                }
            }
        }
    }
    for j in 0..n {
        put(h, x(j), x(j), Scalar::from_int(-1, f));
    }
    put(h, 0, 0, Scalar::from_int(-2, f));
    let algebra = LieAlgebra::from_structure_constants(c, f)?;
    if !algebra.check_jacobi() {
        return Err(Error::InvalidForm("k does not preserve Ω; base grading fails Jacobi".into()));
    }
    let mut degrees = vec![-2];
    degrees.extend(std::iter::repeat(-1).take(n));
    degrees.extend(std::iter::repeat(0).take(r + 1));
    Ok(BaseGrading { graded: GradedLieAlgebra { algebra, degrees, grading_element: Some(h) }, omega: form.matrix.clone(), n, r })
}

impl BaseGrading {
    pub fn field(&self) -> Field {
        self.graded.algebra.field()
    }

    /// First global index of the degree-`deg` component (`deg ∈ {−2,−1,0}`).
    fn offset(&self, deg: i32) -> usize {
        match deg {
            -2 => 0,
            -1 => 1,
            _ => 1 + self.n,
        }
    }

    fn base_dim(&self, deg: i32) -> usize {
        match deg {
            -2 => 1,
            -1 => self.n,
            0 => self.r + 1,
            _ => 0,
        }
    }
}

/// Element of a single graded component, in that component's coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    pub deg: i32,
    pub coords: Vec<Scalar>,
}

impl Elem {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// The base grading together with the prolongations `g_1, g_2, …` computed so far.
///
/// `g_k` lives in `(g_{−2}* ⊗ g_{k−2}) ⊕ (g_{−1}* ⊗ g_{k−1})`, stored as the
/// block `u(F)` followed by the blocks `u(X_1), …, u(X_{2m})`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub base: BaseGrading,
    pub positive: Vec<Subspace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Termination {
    /// `g_k = 0` at the recorded degree.
    Terminated { zero_degree: usize },
    /// Still nonzero at the cap; possibly infinite-dimensional.
    Unbounded { max_degree: usize },
}

#[derive(Clone, Debug)]
pub struct ProlongationResult {
    pub tower: Tower,
    pub termination: Termination,
    /// Full algebra `g_{−2} ⊕ … ⊕ g_K`, only when terminated.
    pub assembled: Option<GradedLieAlgebra>,
}

impl ProlongationResult {
    pub fn dims(&self) -> Vec<usize> {
        self.tower.positive.iter().map(Subspace::dim).collect()
    }

    pub fn terminated(&self) -> bool {
        matches!(self.termination, Termination::Terminated { .. })
    }
}

impl Tower {
    pub fn new(base: BaseGrading) -> Self {
        Tower { base, positive: Vec::new() }
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn top(&self) -> i32 {
        self.positive.len() as i32
    }

    pub fn dim(&self, deg: i32) -> usize {
        if deg <= 0 {
            self.base.base_dim(deg)
        } else {
            self.positive.get(deg as usize - 1).map_or(0, Subspace::dim)
        }
    }

    /// Ambient size of `g_k` candidates.
    pub fn ambient(&self, k: i32) -> usize {
        self.dim(k - 2) + self.base.n * self.dim(k - 1)
    }

    pub fn component(&self, k: usize) -> Option<&Subspace> {
        self.positive.get(k.checked_sub(1)?)
    }

    fn zero(&self, deg: i32) -> Elem {
        Elem { deg, coords: vec![Scalar::zero(self.field()); self.dim(deg)] }
    }

    fn known(&self, deg: i32) -> bool {
        deg < -2 || deg <= self.top() || matches!(self.positive.last(), Some(s) if s.is_zero())
    }

    /// Matrix of `w ↦ [w, X_s]` from `g_j` to `g_{j−1}`, or `w ↦ [w, F]` to
    /// `g_{j−2}` when `s` is `None`.
    fn minus_action(&self, j: i32, s: Option<usize>) -> Result<Matrix> {
        let f = self.field();
        let target = j - if s.is_some() { 1 } else { 2 };
        let rows = self.dim(target);
        let cols = self.dim(j);
        let mut m = Matrix::zeros(rows, cols, f);
        let x = match s {
            Some(s) => Elem { deg: -1, coords: unit(self.base.n, s, f) },
            None => Elem { deg: -2, coords: unit(1, 0, f) },
        };
        for t in 0..cols {
            let w = Elem { deg: j, coords: unit(cols, t, f) };
            let v = self.bracket(&w, &x)?;
            for (row, c) in v.coords.into_iter().enumerate() {
                m.set(row, t, c);
            }
        }
        Ok(m)
    }

    /// Derivation equations for `g_k`; `with_f_equations = false` drops the
    /// conditions coming from pairs `(F, X_j)`.
    fn step_system(&self, k: i32, with_f_equations: bool) -> Result<LinearSystem> {
        let n = self.base.n;
        let d2 = self.dim(k - 2);
        let d1 = self.dim(k - 1);
        let f = self.field();
        let mut sys = LinearSystem::new(d2 + n * d1, f);
        let block = |i: usize| d2 + i * d1;
        let acts: Vec<Matrix> = (0..n).map(|s| self.minus_action(k - 1, Some(s))).collect::<Result<_>>()?;
        // Ω_ij u(F) − [u(X_i), X_j] + [u(X_j), X_i] = 0 in g_{k−2}
        for i in 0..n {
            for j in (i + 1)..n {
                let om = self.base.omega.get(i, j);
                for row in 0..d2 {
                    let mut eq = Equation::new();
                    eq.add(row, om);
                    for t in 0..d1 {
                        eq.sub(block(i) + t, acts[j].get(row, t));
                        eq.add(block(j) + t, acts[i].get(row, t));
                    }
                    sys.push(eq);
                }
            }
        }
        if with_f_equations {
            // [u(F), X_j] − [u(X_j), F] = 0 in g_{k−3}
            let d3 = self.dim(k - 3);
            let on_f = self.minus_action(k - 1, None)?;
            for j in 0..n {
                let a = self.minus_action(k - 2, Some(j))?;
                for row in 0..d3 {
                    let mut eq = Equation::new();
                    for t in 0..d2 {
                        eq.add(t, a.get(row, t));
                    }
                    for t in 0..d1 {
                        eq.sub(block(j) + t, on_f.get(row, t));
                    }
                    sys.push(eq);
                }
            }
        }
        Ok(sys)
    }

    /// Computes and stores the next component `g_{top+1}`.
    pub fn prolong_step(&mut self) -> Result<&Subspace> {
        let k = self.top() + 1;
        let space = self.step_system(k, true)?.kernel();
        self.positive.push(space);
        Ok(self.positive.last().unwrap())
    }

    /// `{φ ∈ g_{−1}*⊗g_0 : ∃A, φ(X)Y − φ(Y)X = Ω(X,Y)A}` with `ψ(F) = A`, in
    /// the same coordinates as `g_1`.
    pub fn g1_alternative(&self) -> Result<Subspace> {
        Ok(self.step_system(1, false)?.kernel())
    }

    fn base_bracket(&self, x: &Elem, y: &Elem) -> Elem {
        let b = &self.base;
        let f = self.field();
        let total = b.graded.dim();
        let embed = |e: &Elem| {
            let mut v = vec![Scalar::zero(f); total];
            let off = b.offset(e.deg);
            for (i, c) in e.coords.iter().enumerate() {
                v[off + i] = c.clone();
            }
            v
        };
        let deg = x.deg + y.deg;
        let full = b.graded.algebra.bracket(&embed(x), &embed(y));
        if deg < -2 {
            return self.zero(deg);
        }
        let off = b.offset(deg);
        Elem { deg, coords: full[off..off + b.base_dim(deg)].to_vec() }
    }

    /// `u(x)` for `u ∈ g_k`, `k ≥ 1`, and `x ∈ g_{−1}` or `g_{−2}`.
    fn evaluate(&self, u: &Elem, x: &Elem) -> Result<Elem> {
        let k = u.deg;
        let space = self.component(k as usize).ok_or_else(|| Error::Precondition(format!("g_{k} not computed")))?;
        let amb = space.combine(&u.coords);
        let d2 = self.dim(k - 2);
        let d1 = self.dim(k - 1);
        let f = self.field();
        if x.deg == -2 {
            let c = &x.coords[0];
            return Ok(Elem { deg: k - 2, coords: amb[..d2].iter().map(|v| v * c).collect() });
        }
        let mut out = vec![Scalar::zero(f); d1];
        for (i, c) in x.coords.iter().enumerate() {
            crate::exactlin::axpy(&mut out, c, &amb[d2 + i * d1..d2 + (i + 1) * d1]);
        }
        Ok(Elem { deg: k - 1, coords: out })
    }

    /// `[u, v]` for `u ∈ g_k` (`k ≥ 1`) and `v ∈ g_l` (`l ≥ 0`), defined by
    /// `[u,v]X = [[u,X],v] + [u,[v,X]]`.
    pub fn extend_bracket(&self, u: &Elem, v: &Elem) -> Result<Elem> {
        if u.deg < 1 || v.deg < 0 {
            return Err(Error::Precondition(format!("extended bracket needs degrees k ≥ 1, l ≥ 0; got {}, {}", u.deg, v.deg)));
        }
        let deg = u.deg + v.deg;
        if !self.known(deg) {
            return Err(Error::Precondition(format!("g_{deg} not computed")));
        }
        if self.dim(deg) == 0 || u.is_zero() || v.is_zero() {
            return Ok(self.zero(deg));
        }
        let f = self.field();
        let n = self.base.n;
        let mut amb = Vec::with_capacity(self.ambient(deg));
        let mut value = |x: Elem| -> Result<()> {
            let ux = self.bracket(u, &x)?;
            let a = self.bracket(&ux, v)?;
            let vx = self.bracket(v, &x)?;
            let b = self.bracket(u, &vx)?;
            amb.extend(a.coords.iter().zip(&b.coords).map(|(p, q)| p + q));
            Ok(())
        };
        value(Elem { deg: -2, coords: unit(1, 0, f) })?;
        for i in 0..n {
            value(Elem { deg: -1, coords: unit(n, i, f) })?;
        }
        let space = self.component(deg as usize).expect("known degree");
        let coords = space
            .coordinates(&amb)
            .ok_or_else(|| Error::Consistency(format!("extended bracket left g_{deg}")))?;
        Ok(Elem { deg, coords })
    }

    /// Bracket of homogeneous elements of the (partially) prolonged algebra.
    pub fn bracket(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        let deg = x.deg + y.deg;
        if deg < -2 || x.is_zero() || y.is_zero() {
            if !self.known(deg) {
                return Err(Error::Precondition(format!("g_{deg} not computed")));
            }
            return Ok(self.zero(deg));
        }
        match (x.deg, y.deg) {
            (a, b) if a <= 0 && b <= 0 => Ok(self.base_bracket(x, y)),
            (a, b) if a >= 1 && b < 0 => self.evaluate(x, y),
            (a, b) if a < 0 && b >= 1 => Ok(negate(self.evaluate(y, x)?)),
            (a, _) if a >= 1 => self.extend_bracket(x, y),
            _ => Ok(negate(self.extend_bracket(y, x)?)),
        }
    }

    /// Rank of the projection of `g_1` onto its `ψ = u(F)` block, and the
    /// dimension of `g_1 ∩ (g_{−1}*⊗g_0)`.
    pub fn g1_diagonal_profile(&self) -> Option<(usize, usize)> {
        let g1 = self.component(1)?;
        let n = self.base.n;
        let f = self.field();
        let psi: Vec<Vec<Scalar>> = g1.basis().iter().map(|b| b[..n].to_vec()).collect();
        let psi_rank = Subspace::span(n, f, &psi).ok()?.dim();
        Some((psi_rank, g1.dim() - psi_rank))
    }

    /// Global basis of the assembled algebra, degree by degree.
    fn global_layout(&self) -> Vec<(i32, usize)> {
        let mut out = Vec::new();
        for deg in -2..=self.top() {
            for i in 0..self.dim(deg) {
                out.push((deg, i));
            }
        }
        out
    }

    /// Structure constants of `g_{−2} ⊕ … ⊕ g_top`; requires `g_top = 0`.
    pub fn assemble(&self) -> Result<GradedLieAlgebra> {
        if !matches!(self.positive.last(), Some(s) if s.is_zero()) && !self.positive.is_empty() {
            return Err(Error::Precondition("prolongation has not terminated".into()));
        }
        let f = self.field();
        let layout = self.global_layout();
        let dim = layout.len();
        let index = |deg: i32, i: usize| layout.iter().position(|&(d, j)| d == deg && j == i).unwrap();
        let elem = |(deg, i): (i32, usize)| Elem { deg, coords: unit(self.dim(deg), i, f) };
        let mut c = vec![vec![vec![Scalar::zero(f); dim]; dim]; dim];
        for p in 0..dim {
            for q in p..dim {
                let v = self.bracket(&elem(layout[p]), &elem(layout[q]))?;
                for (t, val) in v.coords.into_iter().enumerate() {
                    if !val.is_zero() {
                        let k = index(v.deg, t);
                        c[q][p][k] = -&val;
                        c[p][q][k] = val;
                    }
                }
            }
        }
        // The extended bracket must already be antisymmetric; check the lower triangle.
        for p in 0..dim {
            for q in 0..p {
                let v = self.bracket(&elem(layout[p]), &elem(layout[q]))?;
                for (t, val) in v.coords.iter().enumerate() {
                    if *val != c[p][q][index(v.deg, t)] {
                        return Err(Error::Consistency("assembled bracket is not antisymmetric".into()));
                    }
                }
            }
        }
        let algebra = LieAlgebra::from_structure_constants(c, f)?;
        let degrees = layout.iter().map(|&(d, _)| d).collect();
        let h = index(0, self.base.r);
        Ok(GradedLieAlgebra { algebra, degrees, grading_element: Some(h) })
    }
}

fn unit(n: usize, i: usize, f: Field) -> Vec<Scalar> {
    (0..n).map(|k| Scalar::from_int((k == i) as i64, f)).collect()
}

fn negate(e: Elem) -> Elem {
    Elem { deg: e.deg, coords: e.coords.iter().map(|v| -v).collect() }
}

pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Iterates [`Tower::prolong_step`] until a zero component or `max_degree`.
/// A terminated prolongation is assembled and its Jacobi identity checked.
pub fn full_prolongation(base: BaseGrading, max_degree: usize) -> Result<ProlongationResult> {
    let mut tower = Tower::new(base);
    let mut termination = Termination::Unbounded { max_degree };
    for k in 1..=max_degree {
        if tower.prolong_step()?.is_zero() {
            termination = Termination::Terminated { zero_degree: k };
            break;
        }
    }
    let assembled = match termination {
        Termination::Terminated { .. } => {
            let g = tower.assemble()?;
            if !g.algebra.check_jacobi() {
                return Err(Error::Consistency("assembled prolongation fails Jacobi".into()));
            }
            Some(g)
        }
        Termination::Unbounded { .. } => None,
    };
    Ok(ProlongationResult { tower, termination, assembled })
}

use std::collections::{BTreeMap, HashSet};

use super::elim;
use super::scalar::{Field, Scalar};
use super::subspace::Subspace;

/// Homogeneous linear system assembled one equation at a time.
///
/// Equations are accumulated sparsely; exact duplicates (up to a nonzero
/// scalar multiple) and identically vanishing equations are dropped on
/// insertion. Row order is insertion order, so assembly is deterministic.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    field: Field,
    rows: Vec<Vec<(usize, Scalar)>>,
    seen: HashSet<Vec<(usize, Scalar)>>,
}

/// Accumulator for one equation; repeated columns are summed.
#[derive(Clone, Debug, Default)]
pub struct Equation {
    terms: BTreeMap<usize, Scalar>,
}

impl Equation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, unknown: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&unknown) {
            Some(c) => *c += coeff,
            None => {
                self.terms.insert(unknown, coeff.clone());
            }
        }
    }

    pub fn sub(&mut self, unknown: usize, coeff: &Scalar) {
        self.add(unknown, &-coeff);
    }

    fn into_sparse(self) -> Vec<(usize, Scalar)> {
        self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

impl LinearSystem {
    pub fn new(unknowns: usize, field: Field) -> Self {
        LinearSystem { unknowns, field, rows: Vec::new(), seen: HashSet::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, eq: Equation) {
        let row = eq.into_sparse();
        let Some((_, lead)) = row.first() else {
            return;
        };
        assert!(row.last().unwrap().0 < self.unknowns, "unknown index out of range");
        let lead_inv = lead.inv().expect("nonzero lead");
        let key: Vec<(usize, Scalar)> = row.iter().map(|(c, v)| (*c, v * &lead_inv)).collect();
        if self.seen.insert(key) {
            self.rows.push(row);
        }
    }

    pub fn push_sparse(&mut self, terms: impl IntoIterator<Item = (usize, Scalar)>) {
        let mut eq = Equation::new();
        for (c, v) in terms {
            eq.add(c, &v);
        }
        self.push(eq);
    }

    /// Solution space of the system.
    pub fn kernel(&self) -> Subspace {
        Subspace::kernel_of_rows(&self.rows, self.unknowns, self.field)
    }

    pub fn rank(&self) -> usize {
        elim::pivots_sparse(&self.rows, self.unknowns, self.field).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_are_dropped() {
        let mut sys = LinearSystem::new(3, Field::Q);
        sys.push_sparse([(0, Scalar::from(1)), (1, Scalar::from(2))]);
        sys.push_sparse([(0, Scalar::from(-2)), (1, Scalar::from(-4))]);
        sys.push_sparse([(2, Scalar::from(1)), (2, Scalar::from(-1))]);
        assert_eq!(sys.equations(), 1);
        assert_eq!(sys.kernel().dim(), 2);
    }
}

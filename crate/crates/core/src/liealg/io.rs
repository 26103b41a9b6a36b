//! JSON import and export of algebras with their representations.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use super::representation::{InvariantForm, Representation, Symmetry};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub field: Field,
    pub dim: usize,
    pub structure_constants: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub reps: Vec<RepDocument>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepDocument {
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form_symmetry: Option<Symmetry>,
}

fn matrix_from(rows: &[Vec<Scalar>], n: usize, field: Field) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("expected a {n}×{n} matrix")));
    }
    let mut m = Matrix::zeros(n, n, field);
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            m.set(i, j, v.clone().in_field(field)?);
        }
    }
    Ok(m)
}

impl AlgebraDocument {
    pub fn from_parts(algebra: &LieAlgebra, reps: &[&Representation]) -> Self {
        AlgebraDocument {
            field: algebra.field(),
            dim: algebra.dim(),
            structure_constants: algebra.structure_constants(),
            labels: algebra.labels().map(<[String]>::to_vec),
            reps: reps
                .iter()
                .map(|r| RepDocument {
                    dim: r.dim(),
                    matrices: r.matrices().iter().map(Matrix::to_rows).collect(),
                    form: r.form().map(|f| f.matrix.to_rows()),
                    form_symmetry: r.form().map(|f| f.symmetry),
                })
                .collect(),
        }
    }

    /// Validates the document and builds the algebra and every representation.
    pub fn build(&self) -> Result<(Arc<LieAlgebra>, Vec<Representation>)> {
        let field = self.field;
        if self.structure_constants.len() != self.dim
            || self.structure_constants.iter().any(|p| p.len() != self.dim || p.iter().any(|c| c.len() != self.dim))
        {
            return Err(Error::Parse(format!("structure constants must be {0}×{0}×{0}", self.dim)));
        }
        let constants = self
            .structure_constants
            .iter()
            .map(|p| p.iter().map(|c| c.iter().map(|v| v.clone().in_field(field)).collect()).collect())
            .collect::<Result<Vec<Vec<Vec<Scalar>>>>>()?;
        let mut algebra = LieAlgebra::from_structure_constants(constants, field)?;
        if !algebra.check_jacobi() {
            return Err(Error::Parse("structure constants violate the Jacobi identity".into()));
        }
        if let Some(labels) = &self.labels {
            algebra = algebra.with_labels(labels.clone());
        }
        let algebra = Arc::new(algebra);
        let mut reps = Vec::with_capacity(self.reps.len());
        for doc in &self.reps {
            let matrices = doc.matrices.iter().map(|m| matrix_from(m, doc.dim, field)).collect::<Result<Vec<_>>>()?;
            let form = match &doc.form {
                Some(rows) => {
                    let m = matrix_from(rows, doc.dim, field)?;
                    Some(match doc.form_symmetry {
                        Some(s) => InvariantForm::new(m, s)?,
                        None => InvariantForm::detect(m)?,
                    })
                }
                None => None,
            };
            reps.push(Representation::new(algebra.clone(), matrices, form)?);
        }
        Ok((algebra, reps))
    }
}

pub fn parse_document(text: &str) -> Result<(Arc<LieAlgebra>, Vec<Representation>)> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    doc.build()
}

pub fn to_json(algebra: &LieAlgebra, reps: &[&Representation]) -> Result<String> {
    Ok(serde_json::to_string_pretty(&AlgebraDocument::from_parts(algebra, reps))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{
            "field": "q", "dim": 1,
            "structure_constants": [[["0"]]],
            "reps": [{"dim": 2, "matrices": [[["0","1"],["-1","0"]]], "form": [["1","0"],["0","1"]]}]
        }"#;
        let (alg, reps) = parse_document(text).unwrap();
        assert_eq!(reps[0].form().unwrap().symmetry, Symmetry::Symmetric);
        let again = to_json(&alg, &[&reps[0]]).unwrap();
        let (_, reps2) = parse_document(&again).unwrap();
        assert_eq!(reps2[0].matrices(), reps[0].matrices());
    }

    #[test]
    fn rejects_non_invariant_form() {
        let text = r#"{
            "field": "q", "dim": 1,
            "structure_constants": [[["0"]]],
            "reps": [{"dim": 2, "matrices": [[["1","0"],["0","1"]]], "form": [["1","0"],["0","1"]]}]
        }"#;
        assert!(matches!(parse_document(text), Err(Error::InvalidForm(_))));
    }
}

use bergerlab::catalog::{self, CatalogEntry};
use bergerlab::curvature::{decompose_p, decompose_r, identity_tensor, pspace, rnabla_space, rspace, standard_multiplicity};
use bergerlab::exactlin::{Field, Scalar, Subspace};
use bergerlab::liealg::io::parse_document;
use bergerlab::liealg::Symmetry;
use bergerlab::symspace::{build_symmetric_pair, pair_grading};
use bergerlab::tanaka::{build_base_grading, full_prolongation, prolongation_report};
use bergerlab::{Error, Result};
use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Pspace,
    Rspace,
    Rnabla,
    Prolong,
    SymmetricPair,
    Multiplicity,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Pspace => "pspace",
            Quantity::Rspace => "rspace",
            Quantity::Rnabla => "rnabla",
            Quantity::Prolong => "prolong",
            Quantity::SymmetricPair => "symmetric-pair",
            Quantity::Multiplicity => "multiplicity",
        }
    }
}

/// A catalog spec, or `@path` to an algebra document (first module is used).
pub fn load(spec: &str, field: Field) -> Result<CatalogEntry> {
    let Some(path) = spec.strip_prefix('@') else {
        return catalog::resolve(spec, field);
    };
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    let (_, reps) = parse_document(&text)?;
    let rep = reps.into_iter().next().ok_or_else(|| Error::Parse(format!("{path}: no representation")))?;
    Ok(CatalogEntry::new(path, rep, "loaded from file"))
}

fn basis_json(s: &Subspace) -> Value {
    json!(s.basis().iter().map(|v| v.iter().map(Scalar::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub struct ComputeOptions {
    pub field: Field,
    pub emit_basis: bool,
    pub max_degree: usize,
}

pub fn compute(q: Quantity, spec: &str, o: &ComputeOptions) -> Result<Map<String, Value>> {
    let e = load(spec, o.field)?;
    let mut out = Map::new();
    out.insert("command".into(), json!(q.name()));
    out.insert("spec".into(), json!(e.name));
    out.insert("field".into(), json!(crate::scenarios::field_name(o.field)));
    out.insert("module_dim".into(), json!(e.rep.dim()));
    out.insert("algebra_dim".into(), json!(e.rep.algebra_dim()));
    let mut result = Map::new();
    match q {
        Quantity::Pspace => {
            let ps = pspace(&e.rep)?;
            let pd = decompose_p(&ps)?;
            result.insert("dim".into(), json!(ps.dim()));
            result.insert("p0_dim".into(), json!(pd.p0_dim));
            result.insert("p1_dim".into(), json!(pd.p1_dim));
            if o.emit_basis {
                result.insert("basis".into(), basis_json(&ps.space));
            }
        }
        Quantity::Rspace => {
            let rs = rspace(&e.rep);
            let rd = decompose_r(&rs)?;
            result.insert("dim".into(), json!(rs.dim()));
            result.insert("r0_dim".into(), json!(rd.r0_dim));
            result.insert("r1_dim".into(), json!(rd.r1_dim));
            result.insert("r_prime_dim".into(), json!(rd.r_prime_dim));
            if o.emit_basis {
                result.insert("basis".into(), basis_json(&rs.space));
            }
        }
        Quantity::Rnabla => {
            let cs = rnabla_space(&rspace(&e.rep));
            result.insert("dim".into(), json!(cs.dim()));
            result.insert("curvature_dim".into(), json!(cs.curvature_dim));
            if o.emit_basis {
                result.insert("basis".into(), basis_json(&cs.space));
            }
        }
        Quantity::Prolong => {
            let res = full_prolongation(build_base_grading(&e.rep)?, o.max_degree)?;
            let rep = prolongation_report(&res)?;
            result = serde_json::to_value(&rep)?.as_object().cloned().unwrap_or_default();
            if o.emit_basis {
                result.insert("bases".into(), json!(res.tower.positive.iter().map(basis_json).collect::<Vec<_>>()));
            }
        }
        Quantity::SymmetricPair => {
            // X∧Y when it is a curvature tensor, otherwise the first invariant one
            let rs = rspace(&e.rep);
            let sphere = match e.rep.form().map(|f| f.symmetry) {
                Some(Symmetry::Symmetric) => Some(identity_tensor(&e.rep)?).filter(|r| rs.contains(r).unwrap_or(false)),
                _ => None,
            };
            let r = match sphere {
                Some(r) => r,
                None => decompose_r(&rs)?
                    .r1
                    .basis()
                    .first()
                    .cloned()
                    .ok_or_else(|| Error::Precondition("no invariant curvature tensor".into()))?,
            };
            let pair = build_symmetric_pair(&e.rep, &r)?;
            result = serde_json::to_value(pair.report()?)?.as_object().cloned().unwrap_or_default();
            let grading = match spec.replace(' ', "").strip_prefix("sl2xk(").and_then(|s| s.strip_suffix(')')) {
                Some(k) => pair_grading(&catalog::resolve(k, o.field)?)?.map(|g| g.dims().into_values().collect::<Vec<_>>()),
                None => None,
            };
            result.insert("grading_dims".into(), json!(grading));
        }
        Quantity::Multiplicity => {
            result.insert("multiplicity".into(), json!(standard_multiplicity(&e.rep)?));
        }
    }
    out.insert("result".into(), Value::Object(result));
    Ok(out)
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_bergerlab"));
    c.env_remove("BERGERLAB_REPORT_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// The subset of draft-07 used by the shipped schema.
fn valid(v: &Value, s: &Value, root: &Value) -> bool {
    if let Some(r) = s.get("$ref").and_then(Value::as_str) {
        let name = r.trim_start_matches("#/definitions/");
        return valid(v, &root["definitions"][name], root);
    }
    if let Some(alts) = s.get("anyOf").and_then(Value::as_array) {
        if !alts.iter().any(|a| valid(v, a, root)) {
            return false;
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return false;
        }
    }
    if let Some(t) = s.get("type") {
        let types: Vec<&str> = match t {
            Value::String(t) => vec![t.as_str()],
            Value::Array(ts) => ts.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_u64() || v.is_i64(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            return false;
        }
    }
    if let Some(req) = s.get("required").and_then(Value::as_array) {
        if !req.iter().filter_map(Value::as_str).all(|k| v.get(k).is_some()) {
            return false;
        }
    }
    if let (Some(props), Some(obj)) = (s.get("properties").and_then(Value::as_object), v.as_object()) {
        for (k, sub) in props {
            if obj.get(k).is_some_and(|x| !valid(x, sub, root)) {
                return false;
            }
        }
    }
    if let (Some(items), Some(arr)) = (s.get("items"), v.as_array()) {
        if !arr.iter().all(|x| valid(x, items, root)) {
            return false;
        }
    }
    true
}

#[test]
fn lemma_tan_passes() {
    let out = run(&["run", "lemma-tan", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    let s = schema();
    assert!(valid(&v, &s, &s));
    let g = v["checks"].as_array().unwrap().iter().find(|c| c["key"] == "g_dims").unwrap();
    assert_eq!(g["computed"], serde_json::json!([4, 1, 0]));
    assert_eq!(g["provenance"], "published");
}

#[test]
fn prop_and_pair_scenarios() {
    for name in ["prop-c2-g1", "pspace-so-pair"] {
        let out = run(&["run", name]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["run", "no-such-scenario"]).status.code(), Some(2));
    // wrong expectation forced through a parameter override
    let out = run(&["run", "pspace-so-pair", "--param", "spec=tensor(so(3),so(2))"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["run", "pspace-so-pair", "--param", "spec=so(3)", "--field", "q", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["run", "lemma-tan", "--param", "k=so(4)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("error"));
    assert_eq!(run(&["compute", "pspace", "nonsense(2)"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "prolong", "so(3)"]).status.code(), Some(3));
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
}

#[test]
fn compute_examples() {
    let s = schema();
    let cases = [("pspace", "so(2)", "dim", 2), ("rspace", "so(3)", "dim", 6)];
    for (q, spec, key, expect) in cases {
        let out = run(&["compute", q, spec, "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json_of(&out);
        assert!(valid(&v, &s, &s), "{v}");
        assert_eq!(v["result"][key], expect);
    }
    let v = json_of(&run(&["compute", "prolong", "sl2:sym5 in sp(6)", "--json"]));
    assert!(valid(&v, &s, &s));
    assert_eq!(v["result"]["prolongation"], serde_json::json!([0]));
    let v = json_of(&run(&["compute", "multiplicity", "sp(4)", "--json"]));
    assert_eq!(v["result"]["multiplicity"], 1);
    let v = json_of(&run(&["compute", "symmetric-pair", "so(3)", "--json"]));
    assert_eq!(v["result"]["ideal_count"], 2);
    let v = json_of(&run(&["compute", "rnabla", "so(3)", "--json", "--field", "q"]));
    assert!(v["result"]["dim"].as_u64().unwrap() > 0);
}

#[test]
fn emit_basis_and_max_degree() {
    let v = json_of(&run(&["compute", "pspace", "so(2)", "--json", "--emit-basis"]));
    assert_eq!(v["result"]["basis"].as_array().unwrap().len(), 2);
    let v = json_of(&run(&["compute", "prolong", "sp(4)", "--json", "--max-degree", "2"]));
    assert_eq!(v["result"]["prolongation"], serde_json::json!([24, 46]));
    assert_eq!(v["result"]["terminated"], false);
}

#[test]
fn deterministic_output() {
    let a = run(&["run", "star-lemma", "--seed", "5", "--json"]);
    let b = run(&["run", "star-lemma", "--seed", "5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["params"]["seed"], 5);
}

#[test]
fn parallel_matches_sequential() {
    let names = ["lemma-tan", "first-prolongation", "pspace-so-pair"];
    let mut seq = vec!["run"];
    seq.extend(names);
    seq.push("--json");
    let mut par = seq.clone();
    par.push("--parallel");
    let a = run(&seq);
    let b = run(&par);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    let s = schema();
    assert!(valid(&v, &s, &s));
    let order: Vec<_> = v.as_array().unwrap().iter().map(|r| r["scenario"].as_str().unwrap().to_owned()).collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);
}

#[test]
fn report_dir() {
    let dir = std::env::temp_dir().join(format!("bergerlab-reports-{}", std::process::id()));
    let out = bin().args(["run", "first-prolongation"]).env("BERGERLAB_REPORT_DIR", &dir).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("first-prolongation.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["pass"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn file_spec() {
    let dir = std::env::temp_dir().join(format!("bergerlab-doc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("so2.json");
    let doc = r#"{"field":"q","dim":1,"structure_constants":[[["0"]]],
        "reps":[{"dim":2,"matrices":[[["0","-1"],["1","0"]]],"form":[["1","0"],["0","1"]],"form_symmetry":"symmetric"}]}"#;
    std::fs::write(&path, doc).unwrap();
    let arg = format!("@{}", path.display());
    let out = run(&["compute", "pspace", &arg, "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_of(&out)["result"]["dim"], 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn list_names() {
    let out = run(&["list"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["lemma-tan", "prop-c2-g1", "pspace-so-pair", "negative-control"] {
        assert!(text.contains(name));
    }
}

//! Committed golden files: generation from the engine, loading, and
//! structural comparison.
//!
//! `admissibility_table.json` is transcribed from the published table; the
//! other files are produced by [`generate`] and serve as regression data.

use crate::classify::{admissibility_table, TableRow};
use crate::curvature::{build_rc, ricci_of, CASE_IDS};
use crate::error::{Error, Result};
use crate::exterior::{named, MultiVector};
use crate::scalars::{int, q, Scalar};
use crate::spin7::{family, FAMILY_IDS};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

/// Names of the golden files, in a fixed order.
pub const FILES: [&str; 4] = [
    "admissibility_table.json",
    "constants.json",
    "curvature_cases.json",
    "families.json",
];

/// Environment variable overriding the golden directory.
pub const ENV_DIR: &str = "SPIN7_GOLDEN_DIR";

pub fn golden_dir() -> PathBuf {
    std::env::var_os(ENV_DIR)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"))
}

pub fn load(name: &str) -> Result<Value> {
    load_from(&golden_dir(), name)
}

pub fn load_from(dir: &Path, name: &str) -> Result<Value> {
    let path = dir.join(name);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parameter samples used for the family and curvature golden files.
pub fn family_samples(id: &str) -> Vec<Vec<Scalar>> {
    let v = |xs: &[Scalar]| xs.to_vec();
    match id {
        "5.1" => vec![
            v(&[int(1), int(0), int(0)]),
            v(&[int(2), int(-1), q(1, 2)]),
            v(&[q(1, 2), int(3), int(-2)]),
            v(&[int(-1), int(2), int(1)]),
        ],
        "5.2-I" => vec![v(&[int(1)]), v(&[int(2)]), v(&[q(1, 2)])],
        "5.2-II" | "5.3-I" | "5.3-II" => vec![
            v(&[int(1), int(-1), int(2)]),
            v(&[int(2), q(1, 2), int(1)]),
            v(&[int(-2), int(3), q(1, 2)]),
        ],
        "5.4" => vec![v(&[int(1)]), v(&[int(2)]), v(&[q(1, 2)]), v(&[int(3)])],
        _ => Vec::new(),
    }
}

/// Curvature-case samples: `(case, family override, parameters)`.
pub fn curvature_samples() -> Vec<(&'static str, Option<&'static str>, Vec<Scalar>)> {
    vec![
        ("5.1.1", None, vec![int(1), int(0), int(0)]),
        ("5.1.1", None, vec![int(2), int(-1), int(3)]),
        ("5.1.1", None, vec![int(4), int(3), int(1)]),
        ("5.1.2", None, vec![int(1), int(0), int(0)]),
        ("5.1.2", None, vec![int(3), int(0), int(0)]),
        ("5.2.1", None, vec![int(1)]),
        ("5.2.1", None, vec![int(2)]),
        ("5.2.1", Some("5.2-II"), vec![int(1), int(2), int(5)]),
        ("5.2.2", None, vec![int(1)]),
        ("5.2.2", None, vec![int(3)]),
        ("5.3.1", None, vec![int(1), int(2), int(3)]),
        ("5.3.1", None, vec![int(2), int(-1), q(1, 2)]),
    ]
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// `families.json`: the printed Ric^c formulas at the sample points.
pub fn generate_families() -> Result<Value> {
    let mut out = Vec::new();
    for id in FAMILY_IDS {
        let f = family(id)?;
        let samples: Vec<Value> = family_samples(id)
            .into_iter()
            .filter(|p| f.admissible_params(p))
            .map(|p| {
                json!({
                    "params": strings(&p),
                    "torsion": f.evaluate(&p).to_string(),
                    "ricci_diag": strings(&f.ricci_formula(&p)),
                })
            })
            .collect();
        out.push(json!({
            "family": id,
            "param_names": f.param_names,
            "hol": f.iso,
            "samples": samples,
        }));
    }
    Ok(Value::Array(out))
}

/// `curvature_cases.json`: every case at its sample points.
pub fn generate_curvature_cases() -> Result<Value> {
    let mut out = Vec::new();
    for (case, fam, p) in curvature_samples() {
        let c = build_rc(case, fam, &p)?;
        let mut entries = Vec::new();
        for (i, row) in c.tensor.matrix.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    entries.push(json!([i, j, x.to_string()]));
                }
            }
        }
        out.push(json!({
            "case": case,
            "family": c.family,
            "params": strings(&p),
            "hol": c.hol,
            "r": c.r.as_ref().map(|(a, b)| vec![a.to_string(), b.to_string()]),
            "ricci_diag": strings(&ricci_of(&c.tensor).diag()),
            "nonzero_entries": entries,
        }));
    }
    debug_assert!(CASE_IDS
        .iter()
        .all(|id| curvature_samples().iter().any(|(c, _, _)| c == id)));
    Ok(Value::Array(out))
}

/// The constant `c` with `Φ ∧ Φ = c · vol`.
pub fn phi_wedge_phi_constant() -> Scalar {
    let n = named();
    n.big_phi.wedge(&n.big_phi).coeff(crate::exterior::VOL_MASK)
}

/// `constants.json`.
pub fn generate_constants() -> Result<Value> {
    let n = named();
    let c = phi_wedge_phi_constant();
    debug_assert_eq!(n.big_phi.wedge(&n.big_phi), MultiVector::vol().scale(&c));
    Ok(json!({
        "phi_wedge_phi_over_vol": c.to_string(),
        "phi_psi0_eigenvalue": "-14",
    }))
}

pub fn table_json(rows: &[TableRow]) -> Value {
    serde_json::to_value(rows).expect("table rows serialize")
}

/// Computes the content of every golden file.
pub fn generate() -> Result<Vec<(&'static str, Value)>> {
    Ok(vec![
        ("admissibility_table.json", table_json(&admissibility_table()?.rows)),
        ("constants.json", generate_constants()?),
        ("curvature_cases.json", generate_curvature_cases()?),
        ("families.json", generate_families()?),
    ])
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// The transcribed file, which regeneration never overwrites.
pub const TRANSCRIBED: &str = "admissibility_table.json";

/// Writes freshly generated golden files into `dir`. The transcribed table
/// is left untouched unless `include_table` is set.
pub fn regenerate(dir: &Path, include_table: bool) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (name, v) in generate()? {
        if name == TRANSCRIBED && !include_table {
            continue;
        }
        let path = dir.join(name);
        std::fs::write(&path, to_text(&v))
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}

/// Paths (JSON-pointer style) at which two values differ.
pub fn diff(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_at("", expected, actual, &mut out);
    out
}

fn diff_at(path: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let mut keys: Vec<&String> = x.keys().chain(y.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                let p = format!("{path}/{k}");
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) => diff_at(&p, u, v, out),
                    (Some(_), None) => out.push(format!("{p}: missing")),
                    (None, Some(_)) => out.push(format!("{p}: unexpected")),
                    (None, None) => {}
                }
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                out.push(format!("{path}: length {} != {}", x.len(), y.len()));
            }
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                diff_at(&format!("{path}/{i}"), u, v, out);
            }
        }
        _ if a != b => out.push(format!("{path}: expected {a}, got {b}")),
        _ => {}
    }
}

/// Compares every generated file with its committed counterpart.
pub fn check_all() -> Result<Vec<(String, Vec<String>)>> {
    let dir = golden_dir();
    let mut out = Vec::new();
    for (name, v) in generate()? {
        let d = match load_from(&dir, name) {
            Ok(expected) => diff(&expected, &v),
            Err(e) => vec![e.to_string()],
        };
        out.push((name.to_string(), d));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_reports_paths() {
        let a = json!({"x": [1, 2], "y": "s"});
        let b = json!({"x": [1, 3], "z": 0});
        let d = diff(&a, &b);
        assert_eq!(d.len(), 3, "{d:?}");
        assert!(d.iter().any(|s| s.starts_with("/x/1")));
        assert!(diff(&a, &a).is_empty());
    }

    #[test]
    fn samples_are_admissible() {
        for id in FAMILY_IDS {
            let f = family(id).unwrap();
            let n = family_samples(id).iter().filter(|p| f.admissible_params(p)).count();
            assert!(n >= 3, "{id}");
        }
    }
}

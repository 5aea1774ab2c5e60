//! JSON file format for colored link models.
//!
//! ```json
//! {"mu": 2, "nu": 2, "colors": [1, 2], "linking_matrix": [[0, 2], [2, 0]],
//!  "beta0_S": 1, "clasp_count": 2, "chi_complement": [1, 1], "basis_split": [0, 0],
//!  "seifert": {"++": [[-1]], "+-": [[0]], "-+": [[0]], "--": [[-1]]}}
//! ```
//!
//! Sign strings have length `mu`; character `i` is the sign of color `i + 1`.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{Map, Value};

use super::family::{parse_sign_string, sign_string, IntMatrix, SeifertFamily};
use super::link::ColoredLinkModel;
use crate::error::{Error, Result};

const KEYS: [&str; 9] = [
    "mu",
    "nu",
    "colors",
    "linking_matrix",
    "beta0_S",
    "clasp_count",
    "chi_complement",
    "basis_split",
    "seifert",
];

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { path: path.into(), message: message.into() }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema("$", format!("missing key \"{key}\"")))
}

fn as_int(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| schema(path, format!("expected an integer, found {v}")))
}

fn as_count(v: &Value, path: &str) -> Result<usize> {
    let i = as_int(v, path)?;
    usize::try_from(i).map_err(|_| schema(path, format!("expected a non-negative integer, found {i}")))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, format!("expected an array, found {v}")))
}

fn int_vec(v: &Value, path: &str) -> Result<Vec<i64>> {
    as_array(v, path)?.iter().enumerate().map(|(i, x)| as_int(x, &format!("{path}[{i}]"))).collect()
}

fn count_vec(v: &Value, path: &str) -> Result<Vec<usize>> {
    as_array(v, path)?.iter().enumerate().map(|(i, x)| as_count(x, &format!("{path}[{i}]"))).collect()
}

fn int_matrix(v: &Value, path: &str) -> Result<IntMatrix> {
    as_array(v, path)?.iter().enumerate().map(|(i, row)| int_vec(row, &format!("{path}[{i}]"))).collect()
}

fn optional<T>(v: &Value, f: impl FnOnce(&Value) -> Result<T>) -> Result<Option<T>> {
    if v.is_null() {
        Ok(None)
    } else {
        f(v).map(Some)
    }
}

/// Parses a model from JSON text. Shape errors carry the JSON path of the
/// offending value; the semantic invariants are checked by
/// [`ColoredLinkModel::validate`].
pub fn load_str(text: &str) -> Result<ColoredLinkModel> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_value(&root)
}

pub fn from_value(root: &Value) -> Result<ColoredLinkModel> {
    let obj = root.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(format!("$.{k}"), "unknown key"));
    }
    let mu = as_count(field(obj, "mu")?, "$.mu")?;
    if mu == 0 {
        return Err(schema("$.mu", "at least one color is required"));
    }
    if mu > 16 {
        return Err(schema("$.mu", format!("{mu} colors exceed the supported maximum of 16")));
    }
    let nu = as_count(field(obj, "nu")?, "$.nu")?;
    let colors = count_vec(field(obj, "colors")?, "$.colors")?;
    let linking_matrix = int_matrix(field(obj, "linking_matrix")?, "$.linking_matrix")?;
    let beta0_s = as_count(field(obj, "beta0_S")?, "$.beta0_S")?;
    let clasp_count = as_count(field(obj, "clasp_count")?, "$.clasp_count")?;
    let chi_complement = optional(field(obj, "chi_complement")?, |v| int_vec(v, "$.chi_complement"))?;
    let basis_split = optional(field(obj, "basis_split")?, |v| count_vec(v, "$.basis_split"))?;

    let seifert_obj = field(obj, "seifert")?
        .as_object()
        .ok_or_else(|| schema("$.seifert", "expected an object keyed by sign strings"))?;
    let mut matrices: Vec<Option<IntMatrix>> = vec![None; 1 << mu];
    for (key, v) in seifert_obj {
        let path = format!("$.seifert[\"{key}\"]");
        if key.chars().count() != mu {
            return Err(schema(path, format!("sign string must have length {mu}")));
        }
        let mask = parse_sign_string(key).map_err(|_| schema(&path, "sign strings use only '+' and '-'"))?;
        matrices[mask] = Some(int_matrix(v, &path)?);
    }
    let mut full = Vec::with_capacity(1 << mu);
    for (mask, m) in matrices.into_iter().enumerate() {
        let key = sign_string(mask, mu);
        full.push(m.ok_or_else(|| schema(format!("$.seifert[\"{key}\"]"), format!("missing sign vector \"{key}\"")))?);
    }
    let n = full[0].len();
    for (mask, m) in full.iter().enumerate() {
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(schema(
                format!("$.seifert[\"{}\"]", sign_string(mask, mu)),
                format!("expected a {n}x{n} matrix"),
            ));
        }
    }
    let seifert = SeifertFamily::new(mu, full)?;
    Ok(ColoredLinkModel { mu, nu, colors, linking_matrix, seifert, beta0_s, clasp_count, chi_complement, basis_split })
}

pub fn load(path: impl AsRef<Path>) -> Result<ColoredLinkModel> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    load_str(&text)
}

fn write_vec<T: std::fmt::Display>(out: &mut String, v: &[T]) {
    out.push('[');
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}

fn write_matrix(out: &mut String, m: &IntMatrix) {
    out.push('[');
    for (i, row) in m.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_vec(out, row);
    }
    out.push(']');
}

fn write_optional<T: std::fmt::Display>(out: &mut String, v: &Option<Vec<T>>) {
    match v {
        Some(v) => write_vec(out, v),
        None => out.push_str("null"),
    }
}

/// Serializes a model with keys in schema order, one matrix per line.
pub fn to_json(m: &ColoredLinkModel) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"mu\": {},", m.mu);
    let _ = writeln!(out, "  \"nu\": {},", m.nu);
    out.push_str("  \"colors\": ");
    write_vec(&mut out, &m.colors);
    out.push_str(",\n  \"linking_matrix\": ");
    write_matrix(&mut out, &m.linking_matrix);
    let _ = write!(out, ",\n  \"beta0_S\": {},\n  \"clasp_count\": {},\n", m.beta0_s, m.clasp_count);
    out.push_str("  \"chi_complement\": ");
    write_optional(&mut out, &m.chi_complement);
    out.push_str(",\n  \"basis_split\": ");
    write_optional(&mut out, &m.basis_split);
    out.push_str(",\n  \"seifert\": {\n");
    let mut keys: Vec<(String, usize)> =
        (0..1usize << m.seifert.mu()).map(|mask| (sign_string(mask, m.seifert.mu()), mask)).collect();
    keys.sort();
    for (i, (key, mask)) in keys.iter().enumerate() {
        let _ = write!(out, "    \"{key}\": ");
        write_matrix(&mut out, m.seifert.get(*mask));
        out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
    }
    out.push_str("  }\n}\n");
    out
}

pub fn save(m: &ColoredLinkModel, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_json(m)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CLASP: &str = r#"{"mu": 2, "nu": 2, "colors": [1, 2], "linking_matrix": [[0, 2], [2, 0]],
        "beta0_S": 1, "clasp_count": 2, "chi_complement": [1, 1], "basis_split": [0, 0],
        "seifert": {"++": [[-1]], "+-": [[0]], "-+": [[0]], "--": [[-1]]}}"#;

    #[test]
    fn roundtrip() {
        let m = load_str(CLASP).unwrap();
        assert_eq!(m.seifert.by_signs("--").unwrap(), &vec![vec![-1]]);
        assert_eq!(load_str(&to_json(&m)).unwrap(), m);
    }

    #[test]
    fn missing_sign_vector_is_named() {
        let text = CLASP.replace(r#", "--": [[-1]]"#, "");
        match load_str(&text) {
            Err(Error::Schema { path, message }) => {
                assert_eq!(path, "$.seifert[\"--\"]");
                assert!(message.contains("\"--\""));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_values_report_paths() {
        let text = CLASP.replace("\"colors\": [1, 2]", "\"colors\": [1, \"x\"]");
        assert!(matches!(load_str(&text), Err(Error::Schema { path, .. }) if path == "$.colors[1]"));
        let text = CLASP.replace("\"+-\": [[0]]", "\"+-\": [[0, 1]]");
        assert!(matches!(load_str(&text), Err(Error::Schema { path, .. }) if path == "$.seifert[\"+-\"]"));
        let text = CLASP.replace("\"beta0_S\"", "\"beta0\"");
        assert!(matches!(load_str(&text), Err(Error::Schema { .. })));
    }
}

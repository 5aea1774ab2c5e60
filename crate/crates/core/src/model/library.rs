//! The bundled example models.
//!
//! | name | colors | data |
//! |------|--------|------|
//! | `unknot` | 1 | empty family |
//! | `hopf1` | 1 | `V = (-1)`, both components one color |
//! | `hopf2` | 2 | contractible C-complex, empty family |
//! | `trefoil` | 1 | `V = [[-1, 1], [0, -1]]` |
//! | `clasp2` | 2 | `A^ε = (-1)` if `ε_1 = ε_2`, else `(0)` |
//! | `threecolor` | 3 | `A^{±(+,+,+)} = (1)`, all other matrices `(0)` |
//! | `fox` | 3 | `A^ε = (-1)` iff `±ε = (+,-,+)` |
//!
//! Some metadata is not printed with the source data and was chosen to be
//! consistent with the clasp parity constraint and the Euler characteristic
//! identity; [`inferred_fields`] lists those fields.

use super::json::load_str;
use super::link::ColoredLinkModel;
use crate::error::{Error, Result};

const MODELS: [(&str, &str); 7] = [
    ("unknot", include_str!("../../models/unknot.json")),
    ("hopf1", include_str!("../../models/hopf1.json")),
    ("hopf2", include_str!("../../models/hopf2.json")),
    ("trefoil", include_str!("../../models/trefoil.json")),
    ("clasp2", include_str!("../../models/clasp2.json")),
    ("threecolor", include_str!("../../models/threecolor.json")),
    ("fox", include_str!("../../models/fox.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    MODELS.iter().map(|(n, _)| *n).collect()
}

/// The JSON text of a bundled model.
pub fn bundled_json(name: &str) -> Result<&'static str> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    MODELS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, j)| *j)
        .ok_or_else(|| Error::InvalidModel(format!("no bundled model named '{name}' (known: {})", bundled_names().join(", "))))
}

pub fn bundled(name: &str) -> Result<ColoredLinkModel> {
    load_str(bundled_json(name)?)
}

/// Metadata fields of a bundled model that were inferred rather than read
/// off the source data.
pub fn inferred_fields(name: &str) -> &'static [&'static str] {
    match name.strip_suffix(".json").unwrap_or(name) {
        "clasp2" => &["clasp_count", "chi_complement", "basis_split"],
        "threecolor" => &["linking_matrix", "clasp_count", "chi_complement"],
        "fox" => &["linking_matrix", "clasp_count", "chi_complement"],
        "hopf2" => &["chi_complement", "basis_split"],
        _ => &[],
    }
}

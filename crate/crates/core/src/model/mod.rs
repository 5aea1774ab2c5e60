//! Colored link models: generalized Seifert families with their C-complex
//! metadata, validation, the JSON format, the bundled examples and the
//! operations on models.

mod family;
mod json;
mod library;
mod link;
mod moves;
mod ops;

pub use family::{parse_sign_string, sign_at, sign_string, IntMatrix, SeifertFamily, SignMask};
pub use json::{from_value, load, load_str, save, to_json};
pub use library::{bundled, bundled_json, bundled_names, inferred_fields};
pub use link::{validate, ColoredLinkModel, Invariant, Violation};
pub use moves::{apply_hermitian_move, join_components, t1_enlargement, t2_enlargement, HermitianMoveSpec, MoveKind};
pub use ops::{connected_sum, disjoint_sum, mirror, reverse_color};

/// Direct sum, transpose and negation of integer matrices.
pub mod matrix_ops {
    pub use super::family::{direct_sum, negate, transpose};
}

//! Signatures, nullities and Alexander/Conway invariants of colored links,
//! computed from generalized Seifert matrices.

pub mod conway;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod model;
pub mod numeric;
pub mod obstructions;
pub mod verify;

pub use error::{Error, Result};

//! Signatures and nullities of colored links, the matrix `A(t)`, Alexander
//! determinants, presentation matrices and grid scans of the torus.

mod alexander;
mod grid;
mod signature;

pub use alexander::{alexander_matrix, delta0, family_matrix, presentation_matrix, Presentation, PresentationKind};
pub use grid::{grid_scan, GridScan, GRID_LIMIT};
pub use signature::{
    diagonal_specialize, hermitian_at, merge_colors, signature, stratum_index, MergedColoring, SignatureResult,
    SignatureSource,
};

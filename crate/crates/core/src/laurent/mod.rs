//! Exact multivariable Laurent polynomials over the integers.
//!
//! Exponents are stored doubled so that the square-root variables
//! `t_j^{1/2}` share the ring with the ordinary ones.

mod fraction;
mod matrix;
mod poly;
mod text;

pub use fraction::{sinh_factor, LaurentFraction};
pub use matrix::LaurentMatrix;
pub use poly::{Exponents, LaurentPoly};

/// Exact determinant of a square Laurent matrix; the empty matrix has determinant 1.
pub fn det(m: &LaurentMatrix) -> crate::Result<LaurentPoly> {
    m.det()
}

/// Canonical representative of `p` up to units `±t^m`.
pub fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    p.normalize_unit()
}

/// The involution `t_i -> t_i^{-1}`.
pub fn bar_involution(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

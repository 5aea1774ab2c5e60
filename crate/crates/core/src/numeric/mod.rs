//! Torus points, exact arithmetic in cyclotomic fields, certified signs and
//! the Hermitian signature engine.

pub mod ball;
mod cyclotomic;
mod eval;
mod hermitian;
mod torus;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElement, CyclotomicField};
pub use eval::{eval_at, eval_in_field, evaluation_order, Value};
pub use hermitian::{signature_nullity, ApproxHermitian, ExactHermitian, HermitianMatrix, DEFAULT_TOLERANCE};
pub use torus::{prime_of_power, Classification, Coord, TorusPoint};

/// Membership of `ω` in `T^μ_*`, `T^μ_ℚ` and `T^μ_𝒫`.
pub fn classify(omega: &TorusPoint) -> Classification {
    omega.classify()
}

/// Coordinate-wise square root on the principal branch.
pub fn half_point(omega: &TorusPoint) -> TorusPoint {
    omega.half_point()
}

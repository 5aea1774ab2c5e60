use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;

use super::cyclotomic::{CyclotomicElement, CyclotomicField};
use super::torus::TorusPoint;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Value of a polynomial at a torus point.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(CyclotomicElement),
    Approx(Complex64),
}

impl Value {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Value::Exact(e) => e.to_complex(),
            Value::Approx(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// Exact zero test, or `|z| ≤ tol` for approximate values.
    pub fn is_zero_within(&self, tol: f64) -> bool {
        match self {
            Value::Exact(e) => e.is_zero(),
            Value::Approx(z) => z.norm() <= tol,
        }
    }
}

/// Smallest field in which `p(ω)` can be evaluated exactly: the lcm of the
/// coordinate orders, doubled when `p` has half-integer exponents.
pub fn evaluation_order(p: &LaurentPoly, omega: &TorusPoint) -> Option<u64> {
    let q = omega.conductor()?;
    Some(if p.has_half_exponents() { 2 * q } else { q })
}

/// `p(ω)`, exactly at roots of unity, in floating point otherwise.
///
/// Half powers use the branch `t^{1/2} = e^{iθ/2}` with `0 < θ < 2π`.
pub fn eval_at(p: &LaurentPoly, omega: &TorusPoint) -> Result<Value> {
    check_arity(p, omega)?;
    match evaluation_order(p, omega) {
        Some(n) => Ok(Value::Exact(eval_in_field(p, omega, &CyclotomicField::new(n))?)),
        None => Ok(Value::Approx(p.eval_angles(&omega.angles()))),
    }
}

fn check_arity(p: &LaurentPoly, omega: &TorusPoint) -> Result<()> {
    if p.nvars() != omega.mu() {
        return Err(Error::Dimension(format!(
            "polynomial in {} variables evaluated at a point with {} coordinates",
            p.nvars(),
            omega.mu()
        )));
    }
    Ok(())
}

/// `p(ω)` in a caller-chosen cyclotomic field `ℚ(ζ_n)`, which must contain
/// every value `ω_j^{d/2}` that occurs.
pub fn eval_in_field(p: &LaurentPoly, omega: &TorusPoint, field: &Arc<CyclotomicField>) -> Result<CyclotomicElement> {
    check_arity(p, omega)?;
    let pairs = omega
        .exact_pairs()
        .ok_or_else(|| Error::Domain(format!("exact evaluation at the non-rational point {omega}")))?;
    let n = field.order();
    // ω_j^{d/2} = ζ_n^{k_j (n/q_j) d / 2}.
    let mut half_steps = Vec::with_capacity(pairs.len());
    for &(k, q) in &pairs {
        if !n.is_multiple_of(q) {
            return Err(Error::Inconsistent(format!("ℚ(ζ_{n}) does not contain ζ_{q}")));
        }
        half_steps.push((k * (n / q)) as i128);
    }
    let needs_half = p.has_half_exponents();
    if needs_half && pairs.iter().any(|&(_, q)| !(n / q).is_multiple_of(2)) {
        return Err(Error::Inconsistent(format!("ℚ(ζ_{n}) does not contain the required square roots")));
    }
    let mut coeffs = vec![BigInt::from(0); n as usize];
    for (e, c) in p.terms() {
        let mut exp: i128 = 0;
        for (d, s) in e.iter().zip(&half_steps) {
            exp += *d as i128 * s;
        }
        // exp is twice the exponent of ζ_n; it is even by the checks above.
        let k = (exp / 2).rem_euclid(n as i128) as usize;
        coeffs[k] += c;
    }
    Ok(CyclotomicElement::from_power_coefficients(field, coeffs))
}

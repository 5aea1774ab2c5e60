//! Fixed-point ball arithmetic for certified signs.
//!
//! A ball is a midpoint `mid / 2^w` together with a radius `rad / 2^w`;
//! every operation returns a ball that contains the exact result.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub mid: BigInt,
    pub rad: BigInt,
    pub w: u32,
}

impl Ball {
    pub fn exact_integer(v: impl Into<BigInt>, w: u32) -> Self {
        Self { mid: v.into() << w, rad: BigInt::zero(), w }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.w, other.w);
        Self { mid: &self.mid + &other.mid, rad: &self.rad + &other.rad, w: self.w }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.w, other.w);
        Self { mid: &self.mid - &other.mid, rad: &self.rad + &other.rad, w: self.w }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.w, other.w);
        let mid = (&self.mid * &other.mid) >> self.w;
        let spread = self.mid.abs() * &other.rad + other.mid.abs() * &self.rad + &self.rad * &other.rad;
        let rad = ceil_shift(&spread, self.w) + 1u32;
        Self { mid, rad, w: self.w }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self { mid: &self.mid * c, rad: &self.rad * c.abs(), w: self.w }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, d: &BigInt) -> Self {
        assert!(d.is_positive());
        Self { mid: self.mid.div_floor(d), rad: self.rad.div_ceil(d) + 1u32, w: self.w }
    }

    /// `Some(sign)` when the ball excludes zero.
    pub fn sign(&self) -> Option<i32> {
        if self.mid.abs() > self.rad {
            Some(if self.mid.is_positive() { 1 } else { -1 })
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let shift = self.w.saturating_sub(60);
        (&self.mid >> shift).to_f64().unwrap_or(f64::NAN) / 2f64.powi((self.w - shift) as i32)
    }
}

fn ceil_shift(x: &BigInt, w: u32) -> BigInt {
    let d = BigInt::one() << w;
    x.div_ceil(&d)
}

/// `atan(1/x)` for an integer `x ≥ 2`.
fn atan_inv(x: u32, w: u32) -> Ball {
    let one = BigInt::one() << w;
    let x2 = BigInt::from(x) * x;
    let mut power = BigInt::from(x);
    let mut mid = BigInt::zero();
    let mut terms = 0u32;
    let mut k = 0u32;
    loop {
        let term = &one / (&power * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k.is_multiple_of(2) {
            mid += term;
        } else {
            mid -= term;
        }
        terms += 1;
        power *= &x2;
        k += 1;
    }
    Ball { mid, rad: BigInt::from(terms + 1), w }
}

/// π by Machin's formula.
pub fn pi(w: u32) -> Ball {
    let a = atan_inv(5, w).scale_int(&BigInt::from(16));
    let b = atan_inv(239, w).scale_int(&BigInt::from(4));
    a.sub(&b)
}

/// `cos(x)` for a ball `x` with midpoint in `[0, 4]`.
pub fn cos(x: &Ball) -> Ball {
    let w = x.w;
    let m = x.mid.abs();
    let x2 = (&m * &m) >> w;
    let x2_err = BigInt::one();
    let mut term = BigInt::one() << w;
    let mut term_err = BigInt::zero();
    let mut sum = term.clone();
    let mut sum_err = BigInt::zero();
    let mut k: u64 = 1;
    loop {
        let denom = BigInt::from((2 * k - 1) * (2 * k));
        let spread = &term * &x2_err + &term_err * &x2 + &term_err * &x2_err;
        term = ((&term * &x2) >> w) / &denom;
        term_err = (ceil_shift(&spread, w) + 1u32).div_ceil(&denom) + 1u32;
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        sum_err += &term_err;
        // Beyond k = 2 the terms shrink monotonically for |x| ≤ 4, so the
        // alternating tail is bounded by the next term.
        if k >= 3 && term <= BigInt::one() {
            sum_err += &term + &term_err + 1u32;
            break;
        }
        k += 1;
    }
    Ball { mid: sum, rad: sum_err + &x.rad, w }
}

/// Certified sign of `Σ_k coeffs[k] · cos(2πk/n)`, which the caller
/// guarantees to be nonzero. Precision starts at 64 bits and doubles until
/// the enclosing ball excludes zero.
pub fn sign_of_cos_sum(coeffs: &[BigInt], n: u64) -> Result<i32> {
    if coeffs.iter().all(Zero::is_zero) {
        return Ok(0);
    }
    let mut p: u32 = 64;
    loop {
        let w = p + 64;
        let total = cos_sum(coeffs, n, w);
        if let Some(s) = total.sign() {
            return Ok(s);
        }
        if p >= 1 << 16 {
            return Err(Error::Limit(format!(
                "sign not resolved at {p} bits; the value is numerically indistinguishable from zero"
            )));
        }
        p *= 2;
    }
}

/// Enclosure of `Σ_k coeffs[k] · cos(2πk/n)` at working precision `w`.
pub fn cos_sum(coeffs: &[BigInt], n: u64, w: u32) -> Ball {
    let pi = pi(w);
    let mut total = Ball { mid: BigInt::zero(), rad: BigInt::zero(), w };
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = k as u64 % n;
        let k = k.min(n - k);
        let num = BigInt::from(2 * k);
        let den = BigInt::from(n);
        let x = pi.scale_int(&num).div_int(&den);
        total = total.add(&cos(&x).scale_int(c));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_encloses_float_pi() {
        let p = pi(200);
        let approx = p.to_f64();
        assert!((approx - std::f64::consts::PI).abs() < 1e-15);
        assert!(p.rad < BigInt::from(2000));
    }

    #[test]
    fn cos_of_known_angles() {
        for n in 1..40u64 {
            for k in 0..n {
                let mut coeffs = vec![BigInt::zero(); k as usize + 1];
                coeffs[k as usize] = BigInt::one();
                let b = cos_sum(&coeffs, n, 128);
                let expected = (std::f64::consts::TAU * k as f64 / n as f64).cos();
                assert!((b.to_f64() - expected).abs() < 1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn signs_of_integer_combinations() {
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        // 2 + 2(cos(2π/7) + cos(4π/7) + cos(6π/7)) = 1
        assert_eq!(sign_of_cos_sum(&c(&[2, 2, 2, 2]), 7).unwrap(), 1);
        // 2cos(2π/5) − 1 = (√5 − 3)/2
        assert_eq!(sign_of_cos_sum(&c(&[-1, 2]), 5).unwrap(), -1);
        // 2000cos(2π/12) − 1732 = 1000√3 − 1732
        let mut v = vec![0i64; 2];
        v[0] = -1732;
        v[1] = 2000;
        assert_eq!(sign_of_cos_sum(&c(&v), 12).unwrap(), 1);
        assert_eq!(sign_of_cos_sum(&c(&[0, 0]), 12).unwrap(), 0);
    }
}

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball;
use crate::error::{Error, Result};

/// The cyclotomic field `ℚ(ζ_n) = ℚ[x]/Φ_n(x)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    n: u64,
    /// Monic `Φ_n`, coefficients from degree 0 upward.
    phi: Vec<BigInt>,
}

fn field_cache() -> &'static Mutex<HashMap<u64, Arc<CyclotomicField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Φ_n` as an integer coefficient vector, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db)];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

impl CyclotomicField {
    /// The (shared) field of `n`-th roots of unity.
    pub fn new(n: u64) -> Arc<Self> {
        assert!(n >= 1, "cyclotomic field of order 0");
        let mut cache = field_cache().lock().unwrap_or_else(|e| e.into_inner());
        cache
            .entry(n)
            .or_insert_with(|| Arc::new(Self { n, phi: cyclotomic_polynomial(n) }))
            .clone()
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// `φ(n)`, the degree of the field.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduces an integer polynomial modulo `Φ_n`.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        if v.len() > d {
            for i in (d..v.len()).rev() {
                let c = std::mem::take(&mut v[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, pj) in self.phi.iter().enumerate().take(d) {
                    v[i - d + j] -= &c * pj;
                }
            }
        }
        v.resize(d, BigInt::zero());
        v
    }
}

/// An element `(Σ num_k ζ^k) / den` of `ℚ(ζ_n)`, kept in lowest terms
/// with `den > 0` and `deg < φ(n)`; the representation is canonical.
#[derive(Clone)]
pub struct CyclotomicElement {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicElement {
    fn from_parts(field: Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let num = field.reduce(num);
        let mut e = Self { field, num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self { field: field.clone(), num: vec![BigInt::zero(); field.degree()], den: BigInt::one() }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, v: impl Into<BigInt>) -> Self {
        Self::from_parts(field.clone(), vec![v.into()], BigInt::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: &BigRational) -> Self {
        Self::from_parts(field.clone(), vec![r.numer().clone()], r.denom().clone())
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let e = k.rem_euclid(field.n as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self::from_parts(field.clone(), v, BigInt::one())
    }

    /// Integer polynomial `Σ coeffs[k] ζ^k`.
    pub fn from_power_coefficients(field: &Arc<CyclotomicField>, coeffs: Vec<BigInt>) -> Self {
        let n = field.n as usize;
        let mut folded = vec![BigInt::zero(); n.max(1)];
        for (k, c) in coeffs.into_iter().enumerate() {
            folded[k % n] += c;
        }
        Self::from_parts(field.clone(), folded, BigInt::one())
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Numerator coefficients in the power basis `1, ζ, …, ζ^{φ(n)-1}`.
    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Symbolic zero test.
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.first().is_some_and(One::is_one) && self.num.iter().skip(1).all(Zero::is_zero)
    }

    /// Rational value, when the element lies in `ℚ`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).any(|c| !c.is_zero()) {
            return None;
        }
        let c0 = self.num.first().cloned().unwrap_or_else(BigInt::zero);
        Some(BigRational::new(c0, self.den.clone()))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.field.n as usize;
        let mut v = vec![BigInt::zero(); n.max(1)];
        for (k, c) in self.num.iter().enumerate() {
            v[(n - k % n) % n] += c;
        }
        Self::from_parts(self.field.clone(), v, self.den.clone())
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Image under the embedding `ζ ↦ e^{2πi/n}`, in floating point.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.n as f64;
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        self.num
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), std::f64::consts::TAU * k as f64 / n))
            .sum::<Complex64>()
            / d
    }

    /// Certified sign of a real element under the standard embedding.
    pub fn sign(&self) -> Result<i32> {
        if self.is_zero() {
            return Ok(0);
        }
        if !self.is_real() {
            return Err(Error::Inconsistent(format!("sign of the non-real value {self}")));
        }
        ball::sign_of_cos_sum(&self.num, self.field.n)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    /// Inverse from the fraction-free solution of `M s = e_0`, where `M`
    /// is the matrix of multiplication by the numerator.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision("inverse of zero in a cyclotomic field".into()));
        }
        let d = self.field.degree();
        let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); d + 1]; d];
        let mut col = self.num.clone();
        for j in 0..d {
            for (i, c) in col.iter().enumerate() {
                a[i][j] = c.clone();
            }
            col.insert(0, BigInt::zero());
            col = self.field.reduce(col);
        }
        a[0][d] = BigInt::one();
        let det = bareiss_jordan(&mut a);
        let num: Vec<BigInt> = a.iter().map(|row| &row[d] * &self.den).collect();
        Ok(Self::from_parts(self.field.clone(), num, det))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Image in `ℚ(ζ_m)` for a multiple `m` of the current order.
    pub fn lift(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        let (n, m) = (self.field.n, target.n);
        if m % n != 0 {
            return Err(Error::Inconsistent(format!("ℚ(ζ_{n}) does not embed in ℚ(ζ_{m})")));
        }
        let step = (m / n) as usize;
        let mut v = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (k, c) in self.num.iter().enumerate() {
            v[k * step] = c.clone();
        }
        Ok(Self::from_parts(target.clone(), v, self.den.clone()))
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field.n, other.field.n, "cyclotomic elements from different fields");
    }
}

/// Fraction-free Gauss–Jordan elimination of a nonsingular `d × (d+1)`
/// augmented system. On return the left block is `D·I` and the last column
/// is `D·x`; `D` is returned.
fn bareiss_jordan(a: &mut [Vec<BigInt>]) -> BigInt {
    let d = a.len();
    let mut prev = BigInt::one();
    for k in 0..d {
        let p = (k..d).find(|&r| !a[r][k].is_zero()).expect("multiplication by a nonzero element is invertible");
        a.swap(k, p);
        for i in 0..d {
            if i == k {
                continue;
            }
            let (pivot, factor) = (a[k][k].clone(), a[i][k].clone());
            for j in 0..=d {
                let v = &pivot * &a[i][j] - &factor * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    prev
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicElement {}

impl Add<&CyclotomicElement> for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check_field(rhs);
        let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a * &rhs.den + b * &self.den).collect();
        CyclotomicElement::from_parts(self.field.clone(), num, &self.den * &rhs.den)
    }
}

impl Sub<&CyclotomicElement> for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self + &(-rhs)
    }
}

impl Mul<&CyclotomicElement> for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return CyclotomicElement::zero(&self.field);
        }
        let mut v = vec![BigInt::zero(); (self.num.len() + rhs.num.len()).saturating_sub(1)];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        CyclotomicElement::from_parts(self.field.clone(), v, &self.den * &rhs.den)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        -&self
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            });
        }
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z_{})[{}]", self.field.n, self)
    }
}

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent vector, stored doubled: entry `d` stands for the power `d/2`.
pub type Exponents = Vec<i32>;

/// Multivariable Laurent polynomial with integer coefficients.
///
/// Exponents are stored doubled so that the half-integer powers
/// `t_j^{1/2}` used by the Conway potential live in the same ring.
/// The term map never holds a zero coefficient, which makes structural
/// equality coincide with equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    /// The variable `t_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, &unit_exponent(nvars, i, 1), 1)
    }

    /// `c * t^e` for an integer exponent vector `e`.
    pub fn monomial(nvars: usize, exponents: &[i32], c: impl Into<BigInt>) -> Self {
        assert_eq!(exponents.len(), nvars, "exponent vector length");
        Self::monomial_doubled(nvars, exponents.iter().map(|e| 2 * e).collect(), c)
    }

    /// `c * t^(d/2)` for a doubled exponent vector `d`.
    pub fn monomial_doubled(nvars: usize, doubled: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(doubled.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        p.add_term(doubled, c.into());
        p
    }

    /// `t_{i+1}^{num/2}`: the half-integer power constructor.
    pub fn half_power(nvars: usize, i: usize, num: i32) -> Self {
        Self::monomial_doubled(nvars, unit_exponent(nvars, i, num), 1)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&d| d == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `(doubled exponents, coefficient)` in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient_doubled(&self, doubled: &[i32]) -> BigInt {
        self.terms.get(doubled).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `t^e` for an integer exponent vector.
    pub fn coefficient(&self, exponents: &[i32]) -> BigInt {
        let d: Exponents = exponents.iter().map(|e| 2 * e).collect();
        self.coefficient_doubled(&d)
    }

    /// Leading term under lexicographic order on exponent vectors.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// True if some exponent is a proper half-integer.
    pub fn has_half_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|d| d % 2 != 0))
    }

    /// Coordinate-wise minimum of the doubled exponents.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, b) in acc.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
            acc
        }))
    }

    pub fn max_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, b) in acc.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
            acc
        }))
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the monomial `t^(d/2)`.
    pub fn shift_doubled(&self, doubled: &[i32]) -> Self {
        assert_eq!(doubled.len(), self.nvars);
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(doubled).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `t_i -> t_i^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|d| -d).collect(), c.clone()))
                .collect(),
        }
    }

    /// Canonical representative of the class of `self` modulo units
    /// `±t_1^{m_1}...t_μ^{m_μ}`: every variable has minimal exponent zero
    /// and the lex-leading coefficient is positive.
    pub fn normalize_unit(&self) -> Self {
        let Some(min) = self.min_exponents() else {
            return self.clone();
        };
        let neg: Exponents = min.iter().map(|d| -d).collect();
        let shifted = self.shift_doubled(&neg);
        match shifted.leading_term() {
            Some((_, c)) if c.is_negative() => -shifted,
            _ => shifted,
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the divisor does not
    /// divide `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        // Strip monomial content from both sides; a content-free divisor
        // that divides t^a * p also divides p.
        let pmin = self.min_exponents()?;
        let dmin = divisor.min_exponents()?;
        let p = self.shift_doubled(&pmin.iter().map(|d| -d).collect::<Vec<_>>());
        let d = divisor.shift_doubled(&dmin.iter().map(|x| -x).collect::<Vec<_>>());
        let q = p.div_exact_polynomial(&d)?;
        let shift: Exponents = pmin.iter().zip(&dmin).map(|(a, b)| a - b).collect();
        Some(q.shift_doubled(&shift))
    }

    /// Exact division of polynomials with non-negative exponents, by
    /// repeated cancellation of lex-leading terms.
    fn div_exact_polynomial(&self, d: &Self) -> Option<Self> {
        let (dlead_e, dlead_c) = d.leading_term()?;
        let dlead_e = dlead_e.clone();
        let dlead_c = dlead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term() {
            let qe: Exponents = re.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let (qc, r) = rc.div_rem(&dlead_c);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial_doubled(self.nvars, qe, qc);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// `p(t^{1/2})`: halves every exponent. Fails when a stored exponent is
    /// itself a proper half-integer, since quarter powers are not represented.
    pub fn compose_sqrt(&self) -> Option<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().any(|d| d % 2 != 0) {
                return None;
            }
            out.add_term(e.iter().map(|d| d / 2).collect(), c.clone());
        }
        Some(out)
    }

    /// `p(t^2)`: doubles every exponent.
    pub fn compose_square(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|d| 2 * d).collect(), c.clone()))
                .collect(),
        }
    }

    /// Floating evaluation at `t_j = e^{i θ_j}`, with `t_j^{1/2} = e^{i θ_j / 2}`.
    pub fn eval_angles(&self, theta: &[f64]) -> Complex64 {
        assert_eq!(theta.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                let phase: f64 = e.iter().zip(theta).map(|(d, t)| *d as f64 * t / 2.0).sum();
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), phase)
            })
            .sum()
    }

    /// Evaluation at integer points (integer exponents only, all nonzero
    /// variables must be units when exponents are negative).
    pub fn eval_integer(&self, values: &[i64]) -> Option<num_rational::BigRational> {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (d, v) in e.iter().zip(values) {
                if d % 2 != 0 {
                    return None;
                }
                let k = d / 2;
                let base = BigRational::from_integer(BigInt::from(*v));
                if k < 0 && base.is_zero() {
                    return None;
                }
                let p = num_traits::pow(base, k.unsigned_abs() as usize);
                term *= if k < 0 { p.recip() } else { p };
            }
            acc += term;
        }
        Some(acc)
    }
}

fn unit_exponent(nvars: usize, i: usize, value: i32) -> Exponents {
    assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
    let mut e = vec![0; nvars];
    e[i] = value;
    e
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Self {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(nvars: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(nvars, i)
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &t(1, 0) - &t(1, 0);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero(1));
    }

    #[test]
    fn normalize_unit_examples() {
        let one = LaurentPoly::one(2);
        let t1t2 = &t(2, 0) * &t(2, 1);
        let p = -(&one + &t1t2);
        assert_eq!(p.normalize_unit(), &one + &t1t2);

        assert_eq!(LaurentPoly::zero(3).normalize_unit(), LaurentPoly::zero(3));

        // -t^{-1}(t^2 - t + 1) -> t^2 - t + 1
        let tt = t(1, 0);
        let tref = &(&tt.pow(2) - &tt) + &LaurentPoly::one(1);
        let unit = LaurentPoly::monomial(1, &[-1], -1);
        assert_eq!((&unit * &tref).normalize_unit(), tref);
    }

    #[test]
    fn bar_examples() {
        let t1t2 = &t(2, 0) * &t(2, 1);
        assert_eq!(t1t2.bar(), LaurentPoly::monomial(2, &[-1, -1], 1));
        let p = &LaurentPoly::one(2) + &t1t2;
        assert_eq!(p.bar(), &LaurentPoly::one(2) + &LaurentPoly::monomial(2, &[-1, -1], 1));
    }

    #[test]
    fn exact_division() {
        let x = t(2, 0);
        let y = t(2, 1);
        let a = &x + &y;
        let b = &(&x * &y) - &LaurentPoly::monomial(2, &[-1, 0], 3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        let two = LaurentPoly::constant(2, 2);
        assert_eq!(a.div_exact(&two), None);
    }

    #[test]
    fn sqrt_composition_roundtrip() {
        let z = t(1, 0);
        let p = &(&z.pow(2) - &LaurentPoly::one(1)) + &LaurentPoly::monomial(1, &[-2], 1);
        let h = p.compose_sqrt().unwrap();
        assert_eq!(h.compose_square(), p);
        assert!(LaurentPoly::half_power(1, 0, 1).compose_sqrt().is_none());
        assert!(LaurentPoly::half_power(1, 0, 1).has_half_exponents());
    }
}

use super::poly::LaurentPoly;

/// A quotient `numerator / ∏_j (t_j − t_j^{-1})^{d_j}` with `d_j ≥ 0`.
///
/// Only these denominators occur for the Conway potential, so the
/// denominator is stored as its exponent vector.
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    numerator: LaurentPoly,
    den_exponents: Vec<u32>,
}

/// `t_j − t_j^{-1}` in `nvars` variables.
pub fn sinh_factor(nvars: usize, j: usize) -> LaurentPoly {
    &LaurentPoly::var(nvars, j) - &LaurentPoly::monomial(nvars, &unit(nvars, j, -1), 1)
}

fn unit(nvars: usize, j: usize, v: i32) -> Vec<i32> {
    let mut e = vec![0; nvars];
    e[j] = v;
    e
}

impl LaurentFraction {
    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        Self { numerator: p, den_exponents: vec![0; n] }
    }

    /// `numerator * ∏_j (t_j − t_j^{-1})^{powers_j}`, with any negative power
    /// moved into the denominator. The result is reduced.
    pub fn with_sinh_powers(numerator: LaurentPoly, powers: &[i32]) -> Self {
        let nv = numerator.nvars();
        assert_eq!(powers.len(), nv);
        let mut num = numerator;
        let mut den = vec![0u32; nv];
        for (j, &k) in powers.iter().enumerate() {
            if k >= 0 {
                num = &num * &sinh_factor(nv, j).pow(k as u32);
            } else {
                den[j] = k.unsigned_abs();
            }
        }
        Self { numerator: num, den_exponents: den }.reduced()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator_exponents(&self) -> &[u32] {
        &self.den_exponents
    }

    pub fn denominator(&self) -> LaurentPoly {
        let nv = self.numerator.nvars();
        self.den_exponents
            .iter()
            .enumerate()
            .fold(LaurentPoly::one(nv), |acc, (j, &k)| &acc * &sinh_factor(nv, j).pow(k))
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Cancels every factor `t_j − t_j^{-1}` shared by numerator and denominator.
    pub fn reduced(&self) -> Self {
        let nv = self.nvars();
        let mut num = self.numerator.clone();
        let mut den = self.den_exponents.clone();
        if num.is_zero() {
            return Self { numerator: num, den_exponents: vec![0; nv] };
        }
        for (j, d) in den.iter_mut().enumerate() {
            let f = sinh_factor(nv, j);
            while *d > 0 {
                match num.div_exact(&f) {
                    Some(q) => {
                        num = q;
                        *d -= 1;
                    }
                    None => break,
                }
            }
        }
        Self { numerator: num, den_exponents: den }
    }

    /// `f(t^{1/2})`: every variable replaced by its square root. The
    /// denominator factor `t − t^{-1}` becomes `t^{1/2} − t^{-1/2}`, which is
    /// outside the stored form, so the result is returned as a pair
    /// (numerator, denominator) of plain polynomials.
    pub fn compose_sqrt(&self) -> Option<(LaurentPoly, LaurentPoly)> {
        Some((self.numerator.compose_sqrt()?, self.denominator().compose_sqrt()?))
    }

    pub fn bar(&self) -> Self {
        // (t − t^{-1}) maps to −(t − t^{-1}).
        let flips: u32 = self.den_exponents.iter().sum();
        let num = self.numerator.bar();
        Self {
            numerator: if flips % 2 == 1 { -num } else { num },
            den_exponents: self.den_exponents.clone(),
        }
    }
}

impl PartialEq for LaurentFraction {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars()
            && &self.numerator * &other.denominator() == &other.numerator * &self.denominator()
    }
}

impl Eq for LaurentFraction {}

impl std::fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den_exponents.iter().all(|&d| d == 0) {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({})/({})", self.numerator, self.denominator())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_shared_factors() {
        let f = sinh_factor(1, 0);
        let frac = LaurentFraction::with_sinh_powers(&f * &f, &[-1]);
        assert_eq!(frac.denominator_exponents(), &[0]);
        assert_eq!(frac.numerator(), &f);
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let f = sinh_factor(1, 0);
        let a = LaurentFraction::with_sinh_powers(LaurentPoly::one(1), &[-1]);
        let b = LaurentFraction { numerator: f.clone(), den_exponents: vec![2] };
        assert_eq!(a, b);
        assert_ne!(a, LaurentFraction::from_poly(LaurentPoly::one(1)));
    }

    #[test]
    fn bar_of_unknot_potential() {
        let a = LaurentFraction::with_sinh_powers(LaurentPoly::one(1), &[-1]);
        assert_eq!(a.bar(), LaurentFraction::with_sinh_powers(-LaurentPoly::one(1), &[-1]));
    }
}

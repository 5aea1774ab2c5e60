use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::ColoredLinkModel;
use crate::numeric::{
    ApproxHermitian, Coord, CyclotomicElement, CyclotomicField, ExactHermitian, HermitianMatrix, TorusPoint,
    DEFAULT_TOLERANCE,
};

/// `σ_L(ω)` and `η_L(ω)` with the raw nullity of `H(ω)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignatureResult {
    pub sigma: i64,
    pub eta: usize,
    /// Nullity of `H(ω)` before adding `β_0(S) - 1`.
    pub raw_nullity: usize,
    pub point: TorusPoint,
    pub exact: bool,
}

fn check_point(mu: usize, omega: &TorusPoint) -> Result<()> {
    if omega.mu() != mu {
        return Err(Error::Dimension(format!("point {omega} has {} coordinates, the link has {mu} colors", omega.mu())));
    }
    Ok(())
}

/// `H(ω) = ∏(1 - ω̄_i) A(ω)`, exact when every coordinate is a root of
/// unity. Expanding the product, `H(ω) = Σ_ε c_ε A^ε` where `c_ε` has the
/// factor `1 - ω̄_i` for `ε_i = +` and `1 - ω_i` for `ε_i = -`.
pub fn hermitian_at(m: &ColoredLinkModel, omega: &TorusPoint, tolerance: f64) -> Result<HermitianMatrix> {
    check_point(m.mu, omega)?;
    let n = m.size();
    let masks = 1usize << m.mu;
    match (omega.exact_pairs(), omega.conductor()) {
        (Some(pairs), Some(order)) => {
            let field = CyclotomicField::new(order);
            let one = CyclotomicElement::one(&field);
            let plus: Vec<CyclotomicElement> = pairs
                .iter()
                .map(|&(k, q)| &one - &CyclotomicElement::zeta_pow(&field, -((k * (order / q)) as i64)))
                .collect();
            let minus: Vec<CyclotomicElement> = plus.iter().map(CyclotomicElement::conj).collect();
            let coeffs: Vec<CyclotomicElement> = (0..masks)
                .map(|mask| {
                    (0..m.mu).fold(one.clone(), |acc, i| &acc * if mask >> i & 1 == 1 { &minus[i] } else { &plus[i] })
                })
                .collect();
            let mut entries = Vec::with_capacity(n * n);
            for r in 0..n {
                for c in 0..n {
                    let mut v = CyclotomicElement::zero(&field);
                    for (mask, coeff) in coeffs.iter().enumerate() {
                        let a = m.seifert.get(mask)[r][c];
                        if a != 0 {
                            v = &v + &coeff.scale(&num_rational::BigRational::from_integer(a.into()));
                        }
                    }
                    entries.push(v);
                }
            }
            Ok(HermitianMatrix::Exact(ExactHermitian::new(&field, n, entries)?))
        }
        _ => {
            let one = Complex64::new(1.0, 0.0);
            let plus: Vec<Complex64> = omega.angles().iter().map(|t| one - Complex64::from_polar(1.0, -t)).collect();
            let coeffs: Vec<Complex64> = (0..masks)
                .map(|mask| {
                    (0..m.mu).map(|i| if mask >> i & 1 == 1 { plus[i].conj() } else { plus[i] }).product()
                })
                .collect();
            let mut entries = Vec::with_capacity(n * n);
            for r in 0..n {
                for c in 0..n {
                    entries.push(coeffs.iter().enumerate().map(|(mask, z)| z * m.seifert.get(mask)[r][c] as f64).sum());
                }
            }
            Ok(HermitianMatrix::Approx(ApproxHermitian::new(n, entries, tolerance)?))
        }
    }
}

/// Anything with a signature function on the torus: a model, or a model
/// whose colors have been merged.
pub trait SignatureSource: Sync {
    fn mu(&self) -> usize;
    fn nu(&self) -> usize;
    /// `Σ lk(K_a, K_b)` over pairs of components of different colors.
    fn cross_color_linking(&self) -> i64;
    /// `lk(L_i, L_j)` between the sublinks of colors `i ≠ j` (1-based).
    fn sublink_linking(&self, i: usize, j: usize) -> i64;
    fn signature_with_tolerance(&self, omega: &TorusPoint, tolerance: f64) -> Result<SignatureResult>;

    fn signature(&self, omega: &TorusPoint) -> Result<SignatureResult> {
        self.signature_with_tolerance(omega, DEFAULT_TOLERANCE)
    }
}

impl SignatureSource for ColoredLinkModel {
    fn mu(&self) -> usize {
        self.mu
    }

    fn nu(&self) -> usize {
        self.nu
    }

    fn cross_color_linking(&self) -> i64 {
        ColoredLinkModel::cross_color_linking(self)
    }

    fn sublink_linking(&self, i: usize, j: usize) -> i64 {
        ColoredLinkModel::sublink_linking(self, i, j)
    }

    fn signature_with_tolerance(&self, omega: &TorusPoint, tolerance: f64) -> Result<SignatureResult> {
        let h = hermitian_at(self, omega, tolerance)?;
        let (sigma, raw_nullity) = h.signature_nullity()?;
        Ok(SignatureResult {
            sigma,
            eta: raw_nullity + self.beta0_s - 1,
            raw_nullity,
            point: omega.clone(),
            exact: h.is_exact(),
        })
    }
}

/// `σ_L(ω)` and `η_L(ω)`.
pub fn signature(m: &ColoredLinkModel, omega: &TorusPoint) -> Result<SignatureResult> {
    m.signature(omega)
}

/// The same link with colors identified: base color `i` becomes color
/// `color_map[i-1]`. Signatures come from the base model,
/// `σ'(ω') = σ(ω) - Σ lk(L_i, L_j)` over pairs of base colors `i < j`
/// that are merged, with `ω_i = ω'_{color_map[i-1]}`; nullities agree.
#[derive(Clone, Debug, PartialEq)]
pub struct MergedColoring {
    base: ColoredLinkModel,
    color_map: Vec<usize>,
    mu: usize,
    correction: i64,
}

impl MergedColoring {
    pub fn new(base: ColoredLinkModel, color_map: Vec<usize>) -> Result<Self> {
        if color_map.len() != base.mu {
            return Err(Error::Dimension(format!("color map of length {} for {} colors", color_map.len(), base.mu)));
        }
        let mu = color_map.iter().copied().max().unwrap_or(0);
        if color_map.contains(&0) || (1..=mu).any(|c| !color_map.contains(&c)) {
            return Err(Error::InvalidModel(format!("color map {color_map:?} is not onto 1..{mu}")));
        }
        let mut correction = 0;
        for i in 1..=base.mu {
            for j in i + 1..=base.mu {
                if color_map[i - 1] == color_map[j - 1] {
                    correction += base.sublink_linking(i, j);
                }
            }
        }
        Ok(Self { base, color_map, mu, correction })
    }

    /// Merges the last two colors.
    pub fn merge_last_two(base: ColoredLinkModel) -> Result<Self> {
        if base.mu < 2 {
            return Err(Error::InvalidModel("merging needs at least two colors".into()));
        }
        let map = (1..=base.mu).map(|c| c.min(base.mu - 1)).collect();
        Self::new(base, map)
    }

    /// Gives every component the same color.
    pub fn merge_all(base: ColoredLinkModel) -> Result<Self> {
        let map = vec![1; base.mu];
        Self::new(base, map)
    }

    pub fn base(&self) -> &ColoredLinkModel {
        &self.base
    }

    pub fn color_map(&self) -> &[usize] {
        &self.color_map
    }

    /// The point of the base torus over `ω'`.
    pub fn lift(&self, omega: &TorusPoint) -> Result<TorusPoint> {
        check_point(self.mu, omega)?;
        TorusPoint::new(self.color_map.iter().map(|&c| omega.coords()[c - 1]).collect())
    }
}

impl SignatureSource for MergedColoring {
    fn mu(&self) -> usize {
        self.mu
    }

    fn nu(&self) -> usize {
        self.base.nu
    }

    fn cross_color_linking(&self) -> i64 {
        self.base.cross_color_linking() - self.correction
    }

    fn sublink_linking(&self, i: usize, j: usize) -> i64 {
        let mut total = 0;
        for a in 1..=self.base.mu {
            for b in 1..=self.base.mu {
                if self.color_map[a - 1] == i && self.color_map[b - 1] == j && a != b {
                    total += self.base.sublink_linking(a, b);
                }
            }
        }
        total
    }

    fn signature_with_tolerance(&self, omega: &TorusPoint, tolerance: f64) -> Result<SignatureResult> {
        let r = self.base.signature_with_tolerance(&self.lift(omega)?, tolerance)?;
        Ok(SignatureResult { sigma: r.sigma - self.correction, point: omega.clone(), ..r })
    }
}

/// Signature of the coloring obtained by merging the last two colors, at a
/// point whose last two coordinates agree.
pub fn merge_colors(m: &ColoredLinkModel, omega: &TorusPoint) -> Result<SignatureResult> {
    check_point(m.mu, omega)?;
    let merged = MergedColoring::merge_last_two(m.clone())?;
    let c = omega.coords();
    if c[m.mu - 1] != c[m.mu - 2] {
        return Err(Error::Domain(format!("the last two coordinates of {omega} differ")));
    }
    let keep: Vec<usize> = (0..m.mu - 1).collect();
    merged.signature(&omega.project(&keep)?)
}

/// The Levine–Tristram signature and nullity of the underlying one-colored
/// link: `σ_L(ω, …, ω) - Σ_{i<j} lk(L_i, L_j)` and `η_L(ω, …, ω)`.
pub fn diagonal_specialize<S: SignatureSource + ?Sized>(src: &S, omega: Coord) -> Result<(i64, usize)> {
    let r = src.signature(&TorusPoint::diagonal(omega, src.mu())?)?;
    Ok((r.sigma - src.cross_color_linking(), r.eta))
}

/// The index `r` with `ω ∈ Σ_r ∖ Σ_{r+1}`, which is `η_L(ω)`.
pub fn stratum_index<S: SignatureSource + ?Sized>(src: &S, omega: &TorusPoint) -> Result<usize> {
    Ok(src.signature(omega)?.eta)
}

//! Slice and concordance obstructions from signatures at prime-power
//! points, and the Casson–Gordon surgery formula.

use std::fmt;

use log::warn;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{SignatureSource, GRID_LIMIT};
use crate::model::IntMatrix;
use crate::numeric::{prime_of_power, Coord, CyclotomicField, ExactHermitian, TorusPoint};

/// Surgery description of a 3-manifold with a character of order `q`:
/// framed linking matrix `Λ` and exponents `n_i` with `χ(m_i) = e^{2πi n_i/q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryData {
    pub nu: usize,
    pub framed_linking: IntMatrix,
    pub q: u64,
    pub n: Vec<i64>,
}

impl SurgeryData {
    pub fn new(framed_linking: IntMatrix, q: u64, n: Vec<i64>) -> Result<Self> {
        let nu = framed_linking.len();
        if framed_linking.iter().any(|r| r.len() != nu) {
            return Err(Error::Dimension(format!("framed linking matrix is not {nu}x{nu}")));
        }
        if n.len() != nu {
            return Err(Error::Dimension(format!("{} exponents for {nu} components", n.len())));
        }
        if q < 2 {
            return Err(Error::Domain(format!("character order {q} must be at least 2")));
        }
        for i in 0..nu {
            for j in i + 1..nu {
                if framed_linking[i][j] != framed_linking[j][i] {
                    return Err(Error::InvalidModel(format!("Λ is not symmetric at ({i}, {j})")));
                }
            }
        }
        if let Some(x) = n.iter().find(|x| x.gcd(&(q as i64)) != 1) {
            return Err(Error::Domain(format!("exponent {x} is not coprime to {q}")));
        }
        Ok(Self { nu, framed_linking, q, n })
    }

    /// The point `(α^{n_1}, …, α^{n_ν})` with `α = e^{2πi/q}`.
    pub fn point(&self) -> Result<TorusPoint> {
        TorusPoint::new(self.n.iter().map(|&k| Coord::exact(k, self.q)).collect::<Result<_>>()?)
    }
}

/// Topological budget of a surface bounded by the link.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurfaceBudget {
    /// `Σ_i rk H_1(F_i)`.
    pub beta1: u64,
    /// Number of double points.
    pub c: u64,
    pub genus: u64,
}

/// `|σ| + |η - μ + 1| ≤ β_1 + c`.
pub fn murasugi_tristram_ok(sigma: i64, eta: i64, mu: i64, budget: SurfaceBudget) -> bool {
    sigma.unsigned_abs() + (eta - mu + 1).unsigned_abs() <= budget.beta1 + budget.c
}

/// Whether `ω` lies in `T^μ_𝒫`, where signature and nullity are
/// concordance invariants.
pub fn concordance_domain(omega: &TorusPoint) -> bool {
    omega.classify().in_t_p
}

fn check_unlinked_colors<S: SignatureSource + ?Sized>(src: &S) -> Result<()> {
    for i in 1..=src.mu() {
        for j in i + 1..=src.mu() {
            let lk = src.sublink_linking(i, j);
            if lk != 0 {
                return Err(Error::Inapplicable(format!("lk(L_{i}, L_{j}) = {lk}; the slice genus needs unlinked colors")));
            }
        }
    }
    Ok(())
}

/// `max_ω |σ_L(ω)| - min(0, η_L(ω) + 1 - μ)` over the given points; points
/// outside `T^μ_𝒫` are skipped.
pub fn slice_genus_lower_bound<S: SignatureSource + ?Sized>(src: &S, points: &[TorusPoint]) -> Result<u64> {
    check_unlinked_colors(src)?;
    let mu = src.mu() as i64;
    let mut best = 0i64;
    for omega in points {
        if !concordance_domain(omega) {
            warn!("skipping {omega}: coordinate orders are not powers of one prime");
            continue;
        }
        let r = src.signature(omega)?;
        best = best.max(r.sigma.abs() - (r.eta as i64 + 1 - mu).min(0));
    }
    Ok(best as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Violated {
    #[serde(rename = "sigma-nonzero")]
    SigmaNonzero,
    #[serde(rename = "eta-too-small")]
    EtaTooSmall,
}

impl fmt::Display for Violated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violated::SigmaNonzero => "sigma-nonzero",
            Violated::EtaTooSmall => "eta-too-small",
        })
    }
}

/// A point where `σ_L(ω) ≠ 0` or `η_L(ω) < μ - 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub point: String,
    pub sigma: i64,
    pub eta: usize,
    pub violated: Violated,
}

/// Points of `T^μ_𝒫` whose coordinate orders have lcm `N = p^k`, in
/// lexicographic order of numerators over `N`.
pub fn prime_power_points(mu: usize, modulus: u64) -> Result<Vec<TorusPoint>> {
    let p = prime_of_power(modulus).ok_or_else(|| Error::Domain(format!("{modulus} is not a prime power")))?;
    let count = (modulus - 1)
        .checked_pow(mu as u32)
        .filter(|&c| c <= GRID_LIMIT)
        .ok_or_else(|| Error::Limit(format!("{modulus}^{mu} points exceed {GRID_LIMIT}")))?;
    let mut out = Vec::new();
    let mut ks = vec![1u64; mu];
    for _ in 0..count {
        if ks.iter().any(|k| k % p != 0) {
            out.push(TorusPoint::new(ks.iter().map(|&k| Coord::exact(k as i64, modulus)).collect::<Result<_>>()?)?);
        }
        for slot in ks.iter_mut().rev() {
            if *slot + 1 < modulus {
                *slot += 1;
                break;
            }
            *slot = 1;
        }
    }
    Ok(out)
}

/// Every witness against sliceness among the prime-power points with
/// conductor at most `max_q`. An empty list proves nothing.
pub fn slice_obstruction<S: SignatureSource + ?Sized>(src: &S, max_q: u64) -> Result<Vec<Witness>> {
    let mu = src.mu();
    let mut points = Vec::new();
    for modulus in 2..=max_q {
        if prime_of_power(modulus).is_some() {
            points.extend(prime_power_points(mu, modulus)?);
        }
        if points.len() as u64 > GRID_LIMIT {
            return Err(Error::Limit(format!("more than {GRID_LIMIT} points up to conductor {max_q}")));
        }
    }
    let results = points.par_iter().map(|omega| src.signature(omega)).collect::<Result<Vec<_>>>()?;
    let mut witnesses = Vec::new();
    for r in results {
        if r.sigma != 0 {
            witnesses.push(Witness { point: r.point.to_string(), sigma: r.sigma, eta: r.eta, violated: Violated::SigmaNonzero });
        }
        if r.eta + 1 < mu {
            witnesses.push(Witness { point: r.point.to_string(), sigma: r.sigma, eta: r.eta, violated: Violated::EtaTooSmall });
        }
    }
    Ok(witnesses)
}

/// JSON array of witnesses.
pub fn witnesses_to_json(witnesses: &[Witness]) -> String {
    serde_json::to_string_pretty(witnesses).expect("witnesses serialize")
}

/// Signature of a symmetric integer matrix.
pub fn integer_signature(m: &IntMatrix) -> Result<i64> {
    Ok(ExactHermitian::from_integers(&CyclotomicField::new(1), m)?.signature_nullity()?.0)
}

/// `σ(M, χ) = (σ_L(ω) - Σ_{i<j} Λ_ij) - sign(Λ) + (2/q²) Σ_{i,j} (q - n_i) n_j Λ_ij`.
pub fn casson_gordon(s: &SurgeryData, sigma_l: i64) -> Result<BigRational> {
    let lam = &s.framed_linking;
    let mut off_diagonal = BigInt::from(0);
    let mut weighted = BigInt::from(0);
    let q = s.q as i64;
    for i in 0..s.nu {
        for j in 0..s.nu {
            if i < j {
                off_diagonal += lam[i][j];
            }
            weighted += BigInt::from(q - s.n[i]) * s.n[j] * lam[i][j];
        }
    }
    let base = BigInt::from(sigma_l) - off_diagonal - integer_signature(lam)?;
    Ok(BigRational::from_integer(base) + BigRational::new(weighted * 2, BigInt::from(q) * q))
}

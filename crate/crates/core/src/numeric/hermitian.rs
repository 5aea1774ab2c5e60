use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::cyclotomic::{CyclotomicElement, CyclotomicField};
use crate::error::{Error, Result};

/// Default relative tolerance of the floating-point signature path.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A Hermitian matrix over `ℚ(ζ_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactHermitian {
    field: Arc<CyclotomicField>,
    n: usize,
    entries: Vec<CyclotomicElement>,
}

/// A Hermitian matrix of complex floating values with a declared tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxHermitian {
    n: usize,
    entries: Vec<Complex64>,
    tolerance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum HermitianMatrix {
    Exact(ExactHermitian),
    Approx(ApproxHermitian),
}

impl ExactHermitian {
    /// Checks `h_ji = conj(h_ij)` exactly.
    pub fn new(field: &Arc<CyclotomicField>, n: usize, entries: Vec<CyclotomicElement>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.field().order() != field.order()) {
            return Err(Error::Inconsistent("entries from different cyclotomic fields".into()));
        }
        for i in 0..n {
            for j in i..n {
                if entries[j * n + i] != entries[i * n + j].conj() {
                    return Err(Error::Inconsistent(format!("matrix is not Hermitian at ({i}, {j})")));
                }
            }
        }
        Ok(Self { field: field.clone(), n, entries })
    }

    pub fn from_integers(field: &Arc<CyclotomicField>, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("integer matrix is not square".into()));
        }
        let entries = rows.iter().flatten().map(|&v| CyclotomicElement::from_integer(field, v)).collect();
        Self::new(field, n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &CyclotomicElement {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[CyclotomicElement] {
        &self.entries
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_complex())
    }

    /// Signature and nullity by symmetric elimination over the field.
    ///
    /// A nonzero diagonal entry (smallest index first) is used as a pivot
    /// and its certified sign recorded. With a zero diagonal, the
    /// lexicographically first nonzero `h_ij` spans a hyperbolic plane of
    /// signature 0 that is split off. A zero remainder is null.
    pub fn signature_nullity(&self) -> Result<(i64, usize)> {
        let mut h: Vec<Vec<CyclotomicElement>> =
            (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sig = 0i64;
        let mut rank = 0usize;
        while !h.is_empty() {
            let m = h.len();
            if let Some(p) = (0..m).find(|&i| !h[i][i].is_zero()) {
                sig += h[p][p].sign()? as i64;
                rank += 1;
                let inv = h[p][p].inv()?;
                let rest: Vec<usize> = (0..m).filter(|&k| k != p).collect();
                let factors: Vec<CyclotomicElement> = rest.iter().map(|&k| &h[k][p] * &inv).collect();
                h = rest
                    .iter()
                    .zip(&factors)
                    .map(|(&k, f)| rest.iter().map(|&l| &h[k][l] - &(f * &h[p][l])).collect())
                    .collect();
                continue;
            }
            let pair = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).find(|&(i, j)| !h[i][j].is_zero());
            let Some((i, j)) = pair else {
                break;
            };
            rank += 2;
            let inv_ij = h[i][j].inv()?;
            let inv_ji = h[j][i].inv()?;
            let rest: Vec<usize> = (0..m).filter(|&k| k != i && k != j).collect();
            let fi: Vec<CyclotomicElement> = rest.iter().map(|&k| &h[k][i] * &inv_ji).collect();
            let fj: Vec<CyclotomicElement> = rest.iter().map(|&k| &h[k][j] * &inv_ij).collect();
            h = rest
                .iter()
                .zip(fi.iter().zip(&fj))
                .map(|(&k, (a, b))| {
                    rest.iter().map(|&l| &(&h[k][l] - &(a * &h[j][l])) - &(b * &h[i][l])).collect()
                })
                .collect();
        }
        Ok((sig, self.n - rank))
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> Result<CyclotomicElement> {
        let n = self.n;
        let mut a: Vec<Vec<CyclotomicElement>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut det = CyclotomicElement::one(&self.field);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(CyclotomicElement::zero(&self.field));
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det = &det * &a[k][k];
            let inv = a[k][k].inv()?;
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] * &inv;
                for c in k..n {
                    let v = &a[r][c] - &(&f * &a[k][c]);
                    a[r][c] = v;
                }
            }
        }
        Ok(det)
    }
}

impl ApproxHermitian {
    pub fn new(n: usize, entries: Vec<Complex64>, tolerance: f64) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::Parse(format!("tolerance {tolerance} must be positive")));
        }
        let scale = entries.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for i in 0..n {
            for j in i..n {
                if (entries[j * n + i] - entries[i * n + j].conj()).norm() > tolerance * scale {
                    return Err(Error::Inconsistent(format!("matrix is not Hermitian at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, entries, tolerance })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.n == 0 {
            return Vec::new();
        }
        let m = DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j));
        m.symmetric_eigenvalues().iter().copied().collect()
    }

    /// Eigenvalue counts. An eigenvalue is null when `|λ| ≤ τ·ρ/8` with `ρ`
    /// the spectral radius; magnitudes in `(τρ/8, 8τρ)` are indeterminate.
    pub fn signature_nullity(&self) -> Result<(i64, usize)> {
        let eig = self.eigenvalues();
        let rho = eig.iter().map(|l| l.abs()).fold(0.0, f64::max);
        let tol = self.tolerance * rho;
        let mut sig = 0i64;
        let mut null = 0usize;
        for &l in &eig {
            let a = l.abs();
            if a <= tol / 8.0 {
                null += 1;
            } else if a < 8.0 * tol {
                return Err(Error::Indeterminate { magnitude: a, tolerance: tol });
            } else {
                sig += if l > 0.0 { 1 } else { -1 };
            }
        }
        Ok((sig, null))
    }
}

impl HermitianMatrix {
    pub fn size(&self) -> usize {
        match self {
            HermitianMatrix::Exact(h) => h.size(),
            HermitianMatrix::Approx(h) => h.size(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, HermitianMatrix::Exact(_))
    }

    pub fn signature_nullity(&self) -> Result<(i64, usize)> {
        match self {
            HermitianMatrix::Exact(h) => h.signature_nullity(),
            HermitianMatrix::Approx(h) => h.signature_nullity(),
        }
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        match self {
            HermitianMatrix::Exact(h) => h.to_complex(),
            HermitianMatrix::Approx(h) => DMatrix::from_fn(h.n, h.n, |i, j| h.get(i, j)),
        }
    }
}

/// Signature and nullity of a Hermitian matrix.
pub fn signature_nullity(h: &HermitianMatrix) -> Result<(i64, usize)> {
    h.signature_nullity()
}

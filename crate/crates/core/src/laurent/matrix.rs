use num_bigint::BigInt;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Dense row-major matrix of Laurent polynomials in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(nvars: usize, rows: usize, cols: usize) -> Self {
        Self { nvars, rows, cols, entries: vec![LaurentPoly::zero(nvars); rows * cols] }
    }

    pub fn identity(nvars: usize, n: usize) -> Self {
        let mut m = Self::zeros(nvars, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(nvars));
        }
        m
    }

    pub fn from_entries(nvars: usize, rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::Dimension(format!(
                "entry in {} variables, matrix declared over {nvars}",
                bad.nvars()
            )));
        }
        Ok(Self { nvars, rows, cols, entries })
    }

    pub fn from_fn(nvars: usize, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.nvars(), nvars);
                entries.push(p);
            }
        }
        Self { nvars, rows, cols, entries }
    }

    /// Constant matrix from integer data.
    pub fn from_integers(nvars: usize, data: &[Vec<i64>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged integer matrix".into()));
        }
        Ok(Self::from_fn(nvars, rows, cols, |i, j| LaurentPoly::constant(nvars, data[i][j])))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        assert_eq!(p.nvars(), self.nvars);
        let c = self.cols;
        self.entries[i * c + j] = p;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.nvars, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self {
            nvars: self.nvars,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entry-wise `t_i -> t_i^{-1}`.
    pub fn bar(&self) -> Self {
        self.map(LaurentPoly::bar)
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        self.map(|e| e * p)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            nvars: self.nvars,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            nvars: self.nvars,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.nvars, self.rows, other.cols, |i, j| {
            let mut acc = LaurentPoly::zero(self.nvars);
            for k in 0..self.cols {
                acc += &(self.get(i, k) * other.get(k, j));
            }
            acc
        }))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(self.nvars, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                LaurentPoly::zero(self.nvars)
            }
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first multiplied by a monomial so that every entry is an
    /// honest polynomial; the monomials are restored at the end. Every
    /// Bareiss division is exact, so a failed division is an internal bug.
    pub fn det(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let nv = self.nvars;
        if n == 0 {
            return Ok(LaurentPoly::one(nv));
        }
        let mut m: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut restore = vec![0i32; nv];
        for row in m.iter_mut() {
            let mut min: Option<Vec<i32>> = None;
            for p in row.iter() {
                if let Some(e) = p.min_exponents() {
                    min = Some(match min {
                        None => e,
                        Some(cur) => cur.iter().zip(&e).map(|(a, b)| (*a).min(*b)).collect(),
                    });
                }
            }
            let Some(min) = min else {
                return Ok(LaurentPoly::zero(nv));
            };
            let neg: Vec<i32> = min.iter().map(|d| -d).collect();
            for p in row.iter_mut() {
                *p = p.shift_doubled(&neg);
            }
            for (r, d) in restore.iter_mut().zip(&min) {
                *r += d;
            }
        }

        let mut negate = false;
        let mut prev = LaurentPoly::one(nv);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero(nv));
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division must be exact");
                }
                m[i][k] = LaurentPoly::zero(nv);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].shift_doubled(&restore);
        Ok(if negate { -d } else { d })
    }

    /// Integer matrix of constant terms, if every entry is constant.
    pub fn to_integers(&self) -> Option<Vec<Vec<BigInt>>> {
        let zero = vec![0; self.nvars];
        let mut out = vec![vec![BigInt::from(0); self.cols]; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                if p.terms().any(|(e, _)| e != &zero) {
                    return None;
                }
                out[i][j] = p.coefficient_doubled(&zero);
            }
        }
        Some(out)
    }
}

impl std::fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

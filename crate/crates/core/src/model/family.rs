use crate::error::{Error, Result};

/// Square integer matrix stored as rows.
pub type IntMatrix = Vec<Vec<i64>>;

/// Sign vector `ε ∈ {±1}^μ` encoded as a bit mask: bit `i` set means `ε_{i+1} = −1`.
pub type SignMask = usize;

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    let n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub fn negate(m: &IntMatrix) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|v| -v).collect()).collect()
}

pub fn direct_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (na, nb) = (a.len(), b.len());
    let mut out = vec![vec![0; na + nb]; na + nb];
    for i in 0..na {
        out[i][..na].copy_from_slice(&a[i]);
    }
    for i in 0..nb {
        out[na + i][na..].copy_from_slice(&b[i]);
    }
    out
}

/// `ε_i` as `±1`.
pub fn sign_at(mask: SignMask, i: usize) -> i64 {
    if mask >> i & 1 == 1 {
        -1
    } else {
        1
    }
}

/// The sign string of a mask, coordinate `i` at position `i`.
pub fn sign_string(mask: SignMask, mu: usize) -> String {
    (0..mu).map(|i| if sign_at(mask, i) > 0 { '+' } else { '-' }).collect()
}

pub fn parse_sign_string(s: &str) -> Result<SignMask> {
    let mut mask = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            '+' => {}
            '-' => mask |= 1 << i,
            _ => return Err(Error::Parse(format!("sign string '{s}' contains '{c}'"))),
        }
    }
    Ok(mask)
}

/// The generalized Seifert matrices `A^ε`, one per sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertFamily {
    mu: usize,
    n: usize,
    matrices: Vec<IntMatrix>,
}

impl SeifertFamily {
    /// Builds a family from `2^μ` matrices indexed by sign mask. Shapes are
    /// checked here; transpose symmetry is left to validation.
    pub fn new(mu: usize, matrices: Vec<IntMatrix>) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidModel("a family needs at least one color".into()));
        }
        if mu > 16 {
            return Err(Error::Limit(format!("{mu} colors give 2^{mu} Seifert matrices")));
        }
        if matrices.len() != 1 << mu {
            return Err(Error::Dimension(format!("{} matrices supplied, 2^{mu} required", matrices.len())));
        }
        let n = matrices[0].len();
        for (mask, m) in matrices.iter().enumerate() {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension(format!(
                    "A^{} is not {n}x{n}",
                    sign_string(mask, mu)
                )));
            }
        }
        Ok(Self { mu, n, matrices })
    }

    /// The family with `μ` colors and `0×0` matrices.
    pub fn empty(mu: usize) -> Self {
        Self { mu, n: 0, matrices: vec![Vec::new(); 1 << mu] }
    }

    /// Builds the family from `A^ε` for the sign vectors with `ε_1 = +`
    /// (mask bit 0 clear), filling the rest by `A^{-ε} = (A^ε)^T`.
    pub fn from_half(mu: usize, f: impl Fn(SignMask) -> IntMatrix) -> Result<Self> {
        let full = (1usize << mu) - 1;
        let matrices = (0..1usize << mu)
            .map(|mask| if mask & 1 == 0 { f(mask) } else { transpose(&f(mask ^ full)) })
            .collect();
        Self::new(mu, matrices)
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: SignMask) -> &IntMatrix {
        &self.matrices[mask]
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }

    /// `A^ε` for a sign string such as `"+-"`.
    pub fn by_signs(&self, signs: &str) -> Result<&IntMatrix> {
        if signs.chars().count() != self.mu {
            return Err(Error::Dimension(format!("sign string '{signs}' for {} colors", self.mu)));
        }
        Ok(&self.matrices[parse_sign_string(signs)?])
    }

    /// Sign vectors whose matrix is not the transpose of its opposite.
    pub fn transpose_violations(&self) -> Vec<SignMask> {
        let full = (1usize << self.mu) - 1;
        (0..1usize << self.mu)
            .filter(|&mask| mask < mask ^ full)
            .filter(|&mask| self.matrices[mask ^ full] != transpose(&self.matrices[mask]))
            .collect()
    }

    pub fn map(&self, f: impl Fn(SignMask, &IntMatrix) -> IntMatrix) -> Self {
        Self {
            mu: self.mu,
            n: self.n,
            matrices: self.matrices.iter().enumerate().map(|(m, a)| f(m, a)).collect(),
        }
    }

    /// Relabels sign vectors: the new `A^ε` is the old `A^{g(ε)}`.
    pub fn rekey(&self, g: impl Fn(SignMask) -> SignMask) -> Self {
        Self {
            mu: self.mu,
            n: self.n,
            matrices: (0..self.matrices.len()).map(|m| self.matrices[g(m)].clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_strings_roundtrip() {
        for mu in 1..5 {
            for mask in 0..1usize << mu {
                assert_eq!(parse_sign_string(&sign_string(mask, mu)).unwrap(), mask);
            }
        }
        assert_eq!(sign_string(0b10, 2), "+-");
        assert!(parse_sign_string("+x").is_err());
    }

    #[test]
    fn from_half_is_transpose_symmetric() {
        let f = SeifertFamily::from_half(2, |m| vec![vec![m as i64, 1], vec![2, 3]]).unwrap();
        assert!(f.transpose_violations().is_empty());
        assert_eq!(f.by_signs("-+").unwrap(), &transpose(f.by_signs("+-").unwrap()));
    }

    #[test]
    fn shape_errors() {
        assert!(SeifertFamily::new(1, vec![vec![vec![1]]]).is_err());
        assert!(SeifertFamily::new(1, vec![vec![vec![1]], vec![]]).is_err());
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{normalize_unit, LaurentMatrix, LaurentPoly};
use crate::model::{sign_at, ColoredLinkModel, SeifertFamily, SignMask};

/// `Σ_ε ε_1⋯ε_μ t_1^{(1-ε_1)/2}⋯t_μ^{(1-ε_μ)/2} A^ε` for a Seifert family.
pub fn family_matrix(family: &SeifertFamily) -> LaurentMatrix {
    let mu = family.mu();
    let n = family.size();
    let monomials: Vec<(SignMask, LaurentPoly)> = (0..1usize << mu)
        .map(|mask| {
            let exps: Vec<i32> = (0..mu).map(|i| (mask >> i & 1) as i32).collect();
            let sign: i64 = (0..mu).map(|i| sign_at(mask, i)).product();
            (mask, LaurentPoly::monomial(mu, &exps, sign))
        })
        .collect();
    LaurentMatrix::from_fn(mu, n, n, |r, c| {
        let mut p = LaurentPoly::zero(mu);
        for (mask, mono) in &monomials {
            let a = family.get(*mask)[r][c];
            if a != 0 {
                p += &mono.scale(&a.into());
            }
        }
        p
    })
}

/// The matrix `A(t_1, …, t_μ)` of a model.
pub fn alexander_matrix(m: &ColoredLinkModel) -> LaurentMatrix {
    family_matrix(&m.seifert)
}

/// `normalize_unit(det A(t))`. This agrees with the Alexander polynomial up
/// to units and factors `(1 - t_i)`; those factors are not removed.
pub fn delta0(m: &ColoredLinkModel) -> Result<LaurentPoly> {
    if m.beta0_s != 1 {
        return Err(Error::Inapplicable(format!("the C-complex has {} components; delta0 needs a connected one", m.beta0_s)));
    }
    Ok(normalize_unit(&alexander_matrix(m).det()?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationKind {
    /// `tV - V^T` for a Seifert matrix `V`.
    Seifert,
    /// `(t_1t_2A - t_1B - t_2B^T + A^T)·D` with `A = A^{--}`, `B = A^{-+}`.
    Cooper,
    /// `A(t)` over the ring localized at the `t_i - 1`.
    Localized,
}

/// A presentation matrix whose column `i` is divided by `t_j - 1` when
/// `column_denominators[i] = Some(j)` (0-based variable index).
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub matrix: LaurentMatrix,
    pub column_denominators: Vec<Option<usize>>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)?;
        if self.column_denominators.iter().any(Option::is_some) {
            let var = |j: usize| if self.matrix.nvars() == 1 { "t".to_string() } else { format!("t{}", j + 1) };
            let d: Vec<String> = self
                .column_denominators
                .iter()
                .map(|d| d.map_or_else(|| "1".to_string(), |j| format!("({} - 1)^-1", var(j))))
                .collect();
            write!(f, " * diag({})", d.join(", "))?;
        }
        Ok(())
    }
}

/// Presentation matrix of the Alexander module: Seifert's for one color,
/// Cooper's for two (which needs `basis_split`), `A(t)` otherwise.
pub fn presentation_matrix(m: &ColoredLinkModel) -> Result<Presentation> {
    let n = m.size();
    match m.mu {
        1 => {
            let v = LaurentMatrix::from_integers(1, m.seifert.get(1))?;
            let t = LaurentPoly::var(1, 0);
            let matrix = v.scale(&t).sub(&v.transpose())?;
            Ok(Presentation { kind: PresentationKind::Seifert, matrix, column_denominators: vec![None; n] })
        }
        2 => {
            let split = m
                .basis_split
                .as_ref()
                .ok_or_else(|| Error::MissingMetadata("Cooper's presentation needs basis_split".into()))?;
            if split.len() != 2 || split[0] + split[1] > n {
                return Err(Error::InvalidModel(format!("basis_split {split:?} does not fit a {n}x{n} family")));
            }
            let a = LaurentMatrix::from_integers(2, m.seifert.get(0b11))?;
            let b = LaurentMatrix::from_integers(2, m.seifert.get(0b01))?;
            let t1 = LaurentPoly::var(2, 0);
            let t2 = LaurentPoly::var(2, 1);
            let matrix = a
                .scale(&(&t1 * &t2))
                .sub(&b.scale(&t1))?
                .sub(&b.transpose().scale(&t2))?
                .add(&a.transpose())?;
            let column_denominators = (0..n)
                .map(|i| {
                    if i < split[0] {
                        Some(1)
                    } else if i < split[0] + split[1] {
                        Some(0)
                    } else {
                        None
                    }
                })
                .collect();
            Ok(Presentation { kind: PresentationKind::Cooper, matrix, column_denominators })
        }
        _ => Ok(Presentation {
            kind: PresentationKind::Localized,
            matrix: alexander_matrix(m),
            column_denominators: vec![None; n],
        }),
    }
}

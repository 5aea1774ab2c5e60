use std::fmt;

use super::family::{sign_string, IntMatrix, SeifertFamily};

/// A colored link given by its generalized Seifert matrices and the
/// combinatorial data of the C-complex they come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredLinkModel {
    pub mu: usize,
    pub nu: usize,
    /// Color of each component, in `1..=mu`.
    pub colors: Vec<usize>,
    pub linking_matrix: IntMatrix,
    pub seifert: SeifertFamily,
    /// Number of connected components of the C-complex.
    pub beta0_s: usize,
    pub clasp_count: usize,
    /// `χ(S ∖ S_j)` for each color `j`.
    pub chi_complement: Option<Vec<i64>>,
    /// First Betti numbers of the surfaces `S_j`, for Cooper's presentation.
    pub basis_split: Option<Vec<usize>>,
}

/// The invariant a model fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    ColorCount,
    ColorRange,
    ColorSurjectivity,
    LinkingShape,
    LinkingSymmetry,
    LinkingDiagonal,
    FamilyColors,
    TransposeSymmetry,
    Beta0,
    ClaspParity,
    ChiLength,
    BasisSplit,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Invariant::ColorCount => "color count",
            Invariant::ColorRange => "color range",
            Invariant::ColorSurjectivity => "color surjectivity",
            Invariant::LinkingShape => "linking matrix shape",
            Invariant::LinkingSymmetry => "linking matrix symmetry",
            Invariant::LinkingDiagonal => "linking matrix diagonal",
            Invariant::FamilyColors => "family color count",
            Invariant::TransposeSymmetry => "transpose symmetry",
            Invariant::Beta0 => "beta0 positivity",
            Invariant::ClaspParity => "clasp parity",
            Invariant::ChiLength => "chi_complement length",
            Invariant::BasisSplit => "basis_split",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub invariant: Invariant,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.detail)
    }
}

impl ColoredLinkModel {
    /// Size of the Seifert matrices.
    pub fn size(&self) -> usize {
        self.seifert.size()
    }

    /// `Σ_{i<j} lk(L_i, L_j)` over pairs of components with different colors.
    pub fn cross_color_linking(&self) -> i64 {
        let mut total = 0;
        for a in 0..self.nu {
            for b in a + 1..self.nu {
                if self.colors[a] != self.colors[b] {
                    total += self.linking_matrix[a][b];
                }
            }
        }
        total
    }

    /// `lk(L_i, L_j)` between the sublinks of colors `i` and `j` (1-based).
    pub fn sublink_linking(&self, i: usize, j: usize) -> i64 {
        let mut total = 0;
        for a in 0..self.nu {
            for b in 0..self.nu {
                if self.colors[a] == i && self.colors[b] == j && a != b {
                    total += self.linking_matrix[a][b];
                }
            }
        }
        total
    }

    /// Every invariant the model violates; empty when the model is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |invariant, detail: String| out.push(Violation { invariant, detail });

        if self.colors.len() != self.nu {
            push(Invariant::ColorCount, format!("{} colors listed for {} components", self.colors.len(), self.nu));
        }
        if let Some(c) = self.colors.iter().find(|&&c| c == 0 || c > self.mu) {
            push(Invariant::ColorRange, format!("color {c} outside 1..{}", self.mu));
        }
        let missing: Vec<usize> = (1..=self.mu).filter(|c| !self.colors.contains(c)).collect();
        if !missing.is_empty() {
            push(Invariant::ColorSurjectivity, format!("no component has color(s) {missing:?}"));
        }

        let lm = &self.linking_matrix;
        let shape_ok = lm.len() == self.nu && lm.iter().all(|r| r.len() == self.nu);
        if !shape_ok {
            push(Invariant::LinkingShape, format!("linking matrix is not {}x{}", self.nu, self.nu));
        } else {
            for i in 0..self.nu {
                if lm[i][i] != 0 {
                    push(Invariant::LinkingDiagonal, format!("diagonal entry {i} is {}", lm[i][i]));
                }
                for j in i + 1..self.nu {
                    if lm[i][j] != lm[j][i] {
                        push(Invariant::LinkingSymmetry, format!("entries ({i},{j}) and ({j},{i}) differ"));
                    }
                }
            }
        }

        if self.seifert.mu() != self.mu {
            push(Invariant::FamilyColors, format!("family has {} colors, model {}", self.seifert.mu(), self.mu));
        }
        for mask in self.seifert.transpose_violations() {
            let full = (1usize << self.seifert.mu()) - 1;
            push(
                Invariant::TransposeSymmetry,
                format!(
                    "A^{} is not the transpose of A^{}",
                    sign_string(mask ^ full, self.seifert.mu()),
                    sign_string(mask, self.seifert.mu())
                ),
            );
        }

        if self.beta0_s == 0 {
            push(Invariant::Beta0, "beta0_S must be positive".into());
        }
        if self.beta0_s == 1 && shape_ok && self.colors.len() == self.nu {
            let ell = self.cross_color_linking();
            if (self.clasp_count as i64 - ell).rem_euclid(2) != 0 {
                push(
                    Invariant::ClaspParity,
                    format!("clasp count {} and cross-color linking {ell} differ in parity", self.clasp_count),
                );
            }
        }
        if let Some(chi) = &self.chi_complement {
            if chi.len() != self.mu {
                push(Invariant::ChiLength, format!("{} values for {} colors", chi.len(), self.mu));
            }
        }
        if let Some(split) = &self.basis_split {
            if split.len() != self.mu {
                push(Invariant::BasisSplit, format!("{} values for {} colors", split.len(), self.mu));
            } else if split.iter().sum::<usize>() > self.size() {
                push(Invariant::BasisSplit, format!("surface ranks exceed the matrix size {}", self.size()));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// Every invariant `m` violates.
pub fn validate(m: &ColoredLinkModel) -> Vec<Violation> {
    m.validate()
}

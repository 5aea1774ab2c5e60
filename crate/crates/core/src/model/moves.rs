//! Elementary enlargements of Hermitian matrices, and the C-complex moves
//! that induce them on Seifert families.

use num_rational::BigRational;

use super::family::{sign_at, IntMatrix, SeifertFamily, SignMask};
use super::link::ColoredLinkModel;
use crate::error::{Error, Result};
use crate::numeric::{CyclotomicElement, ExactHermitian};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Enlargement,
    Reduction,
}

/// Data of an elementary enlargement
/// `H ↦ [[H, ξ, 0], [ξ*, λ, α], [0, ᾱ, 0]]`, or the matching reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMoveSpec {
    pub kind: MoveKind,
    pub xi: Vec<CyclotomicElement>,
    pub lambda: BigRational,
    pub alpha: Option<CyclotomicElement>,
}

impl HermitianMoveSpec {
    pub fn enlargement(xi: Vec<CyclotomicElement>, lambda: BigRational, alpha: CyclotomicElement) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidModel("enlargement with α = 0".into()));
        }
        Ok(Self { kind: MoveKind::Enlargement, xi, lambda, alpha: Some(alpha) })
    }

    pub fn reduction() -> Self {
        Self { kind: MoveKind::Reduction, xi: Vec::new(), lambda: BigRational::from_integer(0.into()), alpha: None }
    }
}

/// Applies an elementary enlargement or reduction; both preserve signature
/// and nullity.
pub fn apply_hermitian_move(h: &ExactHermitian, spec: &HermitianMoveSpec) -> Result<ExactHermitian> {
    let n = h.size();
    let field = h.field();
    match spec.kind {
        MoveKind::Enlargement => {
            let alpha = spec.alpha.as_ref().ok_or_else(|| Error::InvalidModel("enlargement without α".into()))?;
            if alpha.is_zero() {
                return Err(Error::InvalidModel("enlargement with α = 0".into()));
            }
            if spec.xi.len() != n {
                return Err(Error::Dimension(format!("ξ has {} entries, H is {n}x{n}", spec.xi.len())));
            }
            let zero = CyclotomicElement::zero(field);
            let m = n + 2;
            let mut e = Vec::with_capacity(m * m);
            for i in 0..n {
                e.extend((0..n).map(|j| h.get(i, j).clone()));
                e.push(spec.xi[i].clone());
                e.push(zero.clone());
            }
            e.extend(spec.xi.iter().map(CyclotomicElement::conj));
            e.push(CyclotomicElement::from_rational(field, &spec.lambda));
            e.push(alpha.clone());
            e.extend(std::iter::repeat_n(zero.clone(), n));
            e.push(alpha.conj());
            e.push(zero);
            ExactHermitian::new(field, m, e)
        }
        MoveKind::Reduction => {
            if n < 2 {
                return Err(Error::InvalidModel(format!("cannot reduce a {n}x{n} matrix")));
            }
            let last = n - 1;
            let shape_ok = (0..n).all(|j| j == n - 2 || h.get(last, j).is_zero())
                && !h.get(last, n - 2).is_zero()
                && (0..n - 2).all(|i| h.get(i, last).is_zero());
            if !shape_ok {
                return Err(Error::InvalidModel("matrix does not have the enlargement block shape".into()));
            }
            let k = n - 2;
            let e = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| h.get(i, j).clone()).collect();
            ExactHermitian::new(field, k, e)
        }
    }
}

/// Appends the two new rows and columns of a handle-type move to every
/// `A^ε`: the new `(n+1, n+2)` entry is `corner(-ε)` and the `(n+2, n+1)`
/// entry is `corner(ε)`; the `*` blocks come from `star`, chosen so that
/// transpose symmetry is kept.
fn enlarge_family(
    family: &SeifertFamily,
    corner: impl Fn(SignMask) -> i64,
    mut star: impl FnMut() -> i64,
) -> Result<SeifertFamily> {
    let mu = family.mu();
    let n = family.size();
    let full = (1usize << mu) - 1;
    let mut out: Vec<IntMatrix> = vec![Vec::new(); 1 << mu];
    for mask in 0..1usize << mu {
        if mask > mask ^ full {
            continue;
        }
        let col: Vec<i64> = (0..n).map(|_| star()).collect();
        let row: Vec<i64> = (0..n).map(|_| star()).collect();
        let s = star();
        let mut m = vec![vec![0; n + 2]; n + 2];
        for i in 0..n {
            m[i][..n].copy_from_slice(&family.get(mask)[i]);
            m[i][n] = col[i];
            m[n][i] = row[i];
        }
        m[n][n] = s;
        m[n][n + 1] = corner(mask ^ full);
        m[n + 1][n] = corner(mask);
        out[mask ^ full] = super::family::transpose(&m);
        out[mask] = m;
    }
    SeifertFamily::new(mu, out)
}

/// Handle attachment on the surface of color `k` within one component of
/// the C-complex (move T1).
pub fn t1_enlargement(m: &ColoredLinkModel, k: usize, star: impl FnMut() -> i64) -> Result<ColoredLinkModel> {
    if k == 0 || k > m.mu {
        return Err(Error::InvalidModel(format!("color {k} outside 1..{}", m.mu)));
    }
    let pi = |mask: SignMask| i64::from(sign_at(mask, k - 1) > 0);
    let seifert = enlarge_family(&m.seifert, pi, star)?;
    let chi = m.chi_complement.as_ref().map(|chi| {
        chi.iter().enumerate().map(|(j, c)| if j == k - 1 || m.mu == 1 { *c } else { c - 2 }).collect()
    });
    Ok(ColoredLinkModel { seifert, chi_complement: chi, basis_split: None, ..m.clone() })
}

/// A ribbon intersection between the surfaces of colors `j` and `k`, pushed
/// along an arc into two clasps (move T2).
pub fn t2_enlargement(m: &ColoredLinkModel, j: usize, k: usize, star: impl FnMut() -> i64) -> Result<ColoredLinkModel> {
    if j == k || j == 0 || k == 0 || j > m.mu || k > m.mu {
        return Err(Error::InvalidModel(format!("colors {j}, {k} must be distinct and in 1..{}", m.mu)));
    }
    let delta = |mask: SignMask| i64::from(sign_at(mask, j - 1) > 0 && sign_at(mask, k - 1) > 0);
    let seifert = enlarge_family(&m.seifert, delta, star)?;
    let chi = m.chi_complement.as_ref().map(|chi| {
        chi.iter().enumerate().map(|(l, c)| if l == j - 1 || l == k - 1 { *c } else { c - 2 }).collect()
    });
    Ok(ColoredLinkModel {
        seifert,
        clasp_count: m.clasp_count + 2,
        chi_complement: chi,
        basis_split: None,
        ..m.clone()
    })
}

/// A move joining two components of the C-complex: `A^ε ↦ A^ε ⊕ (0)` and
/// `β_0(S)` drops by one.
pub fn join_components(m: &ColoredLinkModel) -> Result<ColoredLinkModel> {
    if m.beta0_s < 2 {
        return Err(Error::InvalidModel("the C-complex is already connected".into()));
    }
    let seifert = m.seifert.map(|_, a| super::family::direct_sum(a, &vec![vec![0]]));
    Ok(ColoredLinkModel { seifert, beta0_s: m.beta0_s - 1, chi_complement: None, basis_split: None, ..m.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::bundled;
    use crate::numeric::CyclotomicField;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn enlargement_of_a_negative_scalar() {
        let f = CyclotomicField::new(1);
        let h = ExactHermitian::from_integers(&f, &[vec![-8]]).unwrap();
        let spec =
            HermitianMoveSpec::enlargement(vec![CyclotomicElement::zero(&f)], rat(5), CyclotomicElement::one(&f)).unwrap();
        let big = apply_hermitian_move(&h, &spec).unwrap();
        assert_eq!(big.size(), 3);
        assert_eq!(big.signature_nullity().unwrap(), (-1, 0));
        assert_eq!(apply_hermitian_move(&big, &HermitianMoveSpec::reduction()).unwrap(), h);
    }

    #[test]
    fn enlargement_of_the_empty_matrix() {
        let f = CyclotomicField::new(4);
        let h = ExactHermitian::from_integers(&f, &[]).unwrap();
        let alpha = CyclotomicElement::zeta_pow(&f, 1);
        let spec = HermitianMoveSpec::enlargement(vec![], rat(3), alpha).unwrap();
        let big = apply_hermitian_move(&h, &spec).unwrap();
        assert_eq!(big.signature_nullity().unwrap(), (0, 0));
    }

    #[test]
    fn zero_alpha_is_rejected() {
        let f = CyclotomicField::new(1);
        assert!(HermitianMoveSpec::enlargement(vec![], rat(1), CyclotomicElement::zero(&f)).is_err());
    }

    #[test]
    fn family_moves_keep_models_valid() {
        let mut n = 0;
        let mut star = || {
            n += 1;
            n % 5 - 2
        };
        let m = bundled("clasp2").unwrap();
        let t1 = t1_enlargement(&m, 1, &mut star).unwrap();
        assert!(t1.is_valid(), "{:?}", t1.validate());
        assert_eq!(t1.size(), 3);
        assert_eq!(t1.chi_complement, Some(vec![1, -1]));
        let t2 = t2_enlargement(&bundled("threecolor").unwrap(), 1, 3, &mut star).unwrap();
        assert!(t2.is_valid(), "{:?}", t2.validate());
        assert_eq!(t2.clasp_count, 5);
        assert_eq!(t2.chi_complement, Some(vec![1, -1, 1]));
        assert!(join_components(&m).is_err());
    }
}

//! Mirror image, orientation reversal, connected and disjoint sums at the
//! level of Seifert families.

use super::family::{direct_sum, negate, IntMatrix, SeifertFamily, SignMask};
use super::link::ColoredLinkModel;
use crate::error::{Error, Result};

/// Mirror image: every `A^ε` and every linking number changes sign.
pub fn mirror(m: &ColoredLinkModel) -> ColoredLinkModel {
    ColoredLinkModel {
        seifert: m.seifert.map(|_, a| negate(a)),
        linking_matrix: negate(&m.linking_matrix),
        ..m.clone()
    }
}

/// Reverses the orientation of every component of color `i` (1-based).
pub fn reverse_color(m: &ColoredLinkModel, i: usize) -> Result<ColoredLinkModel> {
    if i == 0 || i > m.mu {
        return Err(Error::InvalidModel(format!("color {i} outside 1..{}", m.mu)));
    }
    let bit = 1usize << (i - 1);
    let mut lk = m.linking_matrix.clone();
    for a in 0..m.nu {
        for b in 0..m.nu {
            if (m.colors[a] == i) != (m.colors[b] == i) {
                lk[a][b] = -lk[a][b];
            }
        }
    }
    Ok(ColoredLinkModel { seifert: m.seifert.rekey(|mask| mask ^ bit), linking_matrix: lk, ..m.clone() })
}

/// `χ(S)` of a C-complex, from `β_0(S)` and the rank of `H_1(S)`.
fn euler_characteristic(m: &ColoredLinkModel) -> i64 {
    m.beta0_s as i64 - m.size() as i64
}

fn check_color(m: &ColoredLinkModel, c: usize, which: &str) -> Result<()> {
    if c == 0 || c > m.mu {
        return Err(Error::InvalidModel(format!("{which} color {c} outside 1..{}", m.mu)));
    }
    Ok(())
}

/// Family over `mu` colors with `A^ε = A_a^{ε∘f_a} ⊕ A_b^{ε∘f_b}`, where
/// `f_a`, `f_b` send each color of `a`, `b` to its new color (0-based).
fn combine_families(a: &SeifertFamily, fa: &[usize], b: &SeifertFamily, fb: &[usize], mu: usize) -> Result<SeifertFamily> {
    let pull = |mask: SignMask, f: &[usize]| -> SignMask {
        f.iter().enumerate().fold(0, |acc, (old, &new)| acc | ((mask >> new & 1) << old))
    };
    let matrices: Vec<IntMatrix> =
        (0..1usize << mu).map(|mask| direct_sum(a.get(pull(mask, fa)), b.get(pull(mask, fb)))).collect();
    SeifertFamily::new(mu, matrices)
}

/// Connected sum along a component of color `color_a` in `a` and one of
/// color `color_b` in `b`; the two colors are identified and the remaining
/// colors of `b` are numbered after those of `a`.
pub fn connected_sum(a: &ColoredLinkModel, b: &ColoredLinkModel, color_a: usize, color_b: usize) -> Result<ColoredLinkModel> {
    check_color(a, color_a, "shared")?;
    check_color(b, color_b, "shared")?;
    let mu = a.mu + b.mu - 1;
    let fa: Vec<usize> = (0..a.mu).collect();
    let mut next = a.mu;
    let fb: Vec<usize> = (1..=b.mu)
        .map(|c| {
            if c == color_b {
                color_a - 1
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    let seifert = combine_families(&a.seifert, &fa, &b.seifert, &fb, mu)?;

    let glue_a = a.colors.iter().position(|&c| c == color_a).expect("validated colors are surjective");
    let glue_b = b.colors.iter().position(|&c| c == color_b).expect("validated colors are surjective");
    let mut comp_b = Vec::with_capacity(b.nu);
    let mut nu = a.nu;
    for j in 0..b.nu {
        if j == glue_b {
            comp_b.push(glue_a);
        } else {
            comp_b.push(nu);
            nu += 1;
        }
    }
    let mut colors = a.colors.clone();
    for j in 0..b.nu {
        if j != glue_b {
            colors.push(fb[b.colors[j] - 1] + 1);
        }
    }
    let mut lk = vec![vec![0; nu]; nu];
    for x in 0..a.nu {
        lk[x][..a.nu].copy_from_slice(&a.linking_matrix[x]);
    }
    for x in 0..b.nu {
        for y in 0..b.nu {
            if x != y {
                lk[comp_b[x]][comp_b[y]] += b.linking_matrix[x][y];
            }
        }
    }

    let chi = match (&a.chi_complement, &b.chi_complement) {
        (Some(ca), Some(cb)) => {
            let (xa, xb) = (euler_characteristic(a), euler_characteristic(b));
            let mut chi = vec![0i64; mu];
            for j in 0..a.mu {
                chi[j] = if j == color_a - 1 { ca[j] } else { ca[j] + xb - 1 };
            }
            for (old, &new) in fb.iter().enumerate() {
                chi[new] += if old == color_b - 1 { cb[old] } else { cb[old] + xa - 1 };
            }
            Some(chi)
        }
        _ => None,
    };

    Ok(ColoredLinkModel {
        mu,
        nu,
        colors,
        linking_matrix: lk,
        seifert,
        beta0_s: a.beta0_s + b.beta0_s - 1,
        clasp_count: a.clasp_count + b.clasp_count,
        chi_complement: chi,
        basis_split: None,
    })
}

/// Split union with disjoint color sets; the colors of `b` follow those of `a`.
pub fn disjoint_sum(a: &ColoredLinkModel, b: &ColoredLinkModel) -> Result<ColoredLinkModel> {
    let mu = a.mu + b.mu;
    let fa: Vec<usize> = (0..a.mu).collect();
    let fb: Vec<usize> = (a.mu..mu).collect();
    let seifert = combine_families(&a.seifert, &fa, &b.seifert, &fb, mu)?;
    let nu = a.nu + b.nu;
    let mut colors = a.colors.clone();
    colors.extend(b.colors.iter().map(|c| c + a.mu));
    let mut lk = vec![vec![0; nu]; nu];
    for x in 0..a.nu {
        lk[x][..a.nu].copy_from_slice(&a.linking_matrix[x]);
    }
    for x in 0..b.nu {
        lk[a.nu + x][a.nu..].copy_from_slice(&b.linking_matrix[x]);
    }
    let chi = match (&a.chi_complement, &b.chi_complement) {
        (Some(ca), Some(cb)) => {
            let (xa, xb) = (euler_characteristic(a), euler_characteristic(b));
            Some(ca.iter().map(|c| c + xb).chain(cb.iter().map(|c| c + xa)).collect())
        }
        _ => None,
    };
    Ok(ColoredLinkModel {
        mu,
        nu,
        colors,
        linking_matrix: lk,
        seifert,
        beta0_s: a.beta0_s + b.beta0_s,
        clasp_count: a.clasp_count + b.clasp_count,
        chi_complement: chi,
        basis_split: None,
    })
}

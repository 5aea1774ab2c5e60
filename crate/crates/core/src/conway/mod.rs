//! The Conway potential function of a colored link computed from its
//! C-complex, and the signature relations for local moves.

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::laurent::{LaurentFraction, LaurentMatrix, LaurentPoly};
use crate::model::{sign_at, ColoredLinkModel};
use crate::numeric::{eval_at, eval_in_field, Coord, CyclotomicElement, CyclotomicField, TorusPoint, Value, DEFAULT_TOLERANCE};
use crate::invariants::SignatureSource;

/// A potential, either as a rational function or evaluated at `ω^{1/2}`.
#[derive(Clone, Debug, PartialEq)]
pub enum PotentialValue {
    Symbolic(LaurentFraction),
    Evaluated(Value),
}

/// `B(t) = Σ_ε ε_1⋯ε_μ t_1^{ε_1}⋯t_μ^{ε_μ} A^ε`.
pub fn b_matrix(m: &ColoredLinkModel) -> LaurentMatrix {
    let mu = m.mu;
    let n = m.size();
    let monomials: Vec<LaurentPoly> = (0..1usize << mu)
        .map(|mask| {
            let exps: Vec<i32> = (0..mu).map(|i| sign_at(mask, i) as i32).collect();
            let sign: i64 = (0..mu).map(|i| sign_at(mask, i)).product();
            LaurentPoly::monomial(mu, &exps, sign)
        })
        .collect();
    LaurentMatrix::from_fn(mu, n, n, |r, c| {
        let mut p = LaurentPoly::zero(mu);
        for (mask, mono) in monomials.iter().enumerate() {
            let a = m.seifert.get(mask)[r][c];
            if a != 0 {
                p += &mono.scale(&a.into());
            }
        }
        p
    })
}

/// `∇_L = (-1)^{(c-ℓ)/2} ∏_j (t_j - t_j^{-1})^{χ(S∖S_j) - 1} det(-B(t))`.
pub fn potential(m: &ColoredLinkModel) -> Result<LaurentFraction> {
    let chi = m
        .chi_complement
        .as_ref()
        .ok_or_else(|| Error::MissingMetadata("the potential needs chi_complement".into()))?;
    if chi.len() != m.mu {
        return Err(Error::InvalidModel(format!("chi_complement has {} entries for {} colors", chi.len(), m.mu)));
    }
    if m.beta0_s != 1 {
        return Err(Error::Inapplicable(format!("the C-complex has {} components; the potential needs a connected one", m.beta0_s)));
    }
    let excess = m.clasp_count as i64 - m.cross_color_linking();
    if excess.is_odd() {
        return Err(Error::InvalidModel(format!("c - ℓ = {excess} is odd")));
    }
    let mut det = b_matrix(m).det()?;
    if (m.size() + (excess / 2).rem_euclid(2) as usize).is_odd() {
        det = -det;
    }
    let powers: Vec<i32> = chi.iter().map(|&x| x as i32 - 1).collect();
    Ok(LaurentFraction::with_sinh_powers(det, &powers))
}

/// `f(ω^{1/2})` on the principal branch. Exact values live in `ℚ(ζ_N)`
/// with `4 | N`, so that they can be multiplied by powers of `i`.
pub fn evaluate_at_half_point(f: &LaurentFraction, omega: &TorusPoint) -> Result<Value> {
    if f.nvars() != omega.mu() {
        return Err(Error::Dimension(format!("potential in {} variables at a point with {} coordinates", f.nvars(), omega.mu())));
    }
    let half = omega.half_point();
    let den = f.denominator();
    match half.conductor() {
        Some(n) => {
            let field = CyclotomicField::new(n.lcm(&4));
            let num = eval_in_field(f.numerator(), &half, &field)?;
            let den = eval_in_field(&den, &half, &field)?;
            Ok(Value::Exact(num.div(&den)?))
        }
        None => {
            let angles = half.angles();
            Ok(Value::Approx(f.numerator().eval_angles(&angles) / den.eval_angles(&angles)))
        }
    }
}

/// `∇_L(ω^{1/2})`.
pub fn potential_at(m: &ColoredLinkModel, omega: &TorusPoint) -> Result<Value> {
    evaluate_at_half_point(&potential(m)?, omega)
}

/// Which side of a local move is computed from the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `σ_L` from the signature of the moved link.
    LFromMoved,
    /// The signature of the moved link from `σ_L`.
    MovedFromL,
}

/// Common representation of two values: both exact in one field, or both
/// complex.
enum Pair {
    Exact(CyclotomicElement, CyclotomicElement),
    Approx(Complex64, Complex64),
}

fn pair(a: &Value, b: &Value) -> Result<Pair> {
    match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => {
            let n = x.field().order().lcm(&y.field().order()).lcm(&4);
            let f = CyclotomicField::new(n);
            Ok(Pair::Exact(x.lift(&f)?, y.lift(&f)?))
        }
        _ => Ok(Pair::Approx(a.to_complex(), b.to_complex())),
    }
}

/// `sgn(i^k · num / den)`, requiring the quantity to be real.
fn ratio_sign(num: &Value, den: &Value, i_power: i64) -> Result<i64> {
    match pair(num, den)? {
        Pair::Exact(x, y) => {
            if y.is_zero() {
                return Err(Error::ZeroDivision("the potential in the denominator vanishes".into()));
            }
            let i = CyclotomicElement::zeta_pow(x.field(), (x.field().order() / 4 * i_power.rem_euclid(4) as u64) as i64);
            let r = &i * &x.div(&y)?;
            if !r.is_real() {
                return Err(Error::Inconsistent(format!("the ratio {r} is not real")));
            }
            Ok(r.sign()? as i64)
        }
        Pair::Approx(x, y) => {
            let scale = x.norm().max(y.norm()).max(1.0);
            if y.norm() <= DEFAULT_TOLERANCE * scale {
                return Err(Error::ZeroDivision("the potential in the denominator vanishes".into()));
            }
            if x.norm() <= DEFAULT_TOLERANCE * scale {
                return Ok(0);
            }
            let r = Complex64::i().powi(i_power.rem_euclid(4) as i32) * x / y;
            if r.im.abs() > 1e-6 * r.norm() {
                return Err(Error::Inconsistent(format!("the ratio {r} is not real")));
            }
            Ok(if r.re > 0.0 { 1 } else { -1 })
        }
    }
}

/// Crossing change between strands of one color:
/// `σ_L = σ_{L'} + sgn(i ∇_L/∇_{L'})`, or conversely
/// `σ_{L'} = σ_L + sgn(i ∇_{L'}/∇_L)`, all potentials taken at `ω^{1/2}`.
pub fn local_move_a(sigma_known: i64, nabla_l: &Value, nabla_lp: &Value, direction: Direction) -> Result<i64> {
    Ok(match direction {
        Direction::LFromMoved => sigma_known + ratio_sign(nabla_l, nabla_lp, 1)?,
        Direction::MovedFromL => sigma_known + ratio_sign(nabla_lp, nabla_l, 1)?,
    })
}

/// Crossing change between strands of different colors:
/// `σ_L = σ_{L''} + δ·sgn(∇_L/∇_{L''})`, or conversely
/// `σ_{L''} = σ_L - δ·sgn(∇_{L''}/∇_L)`.
pub fn local_move_b(sigma_known: i64, nabla_l: &Value, nabla_lpp: &Value, delta: i64, direction: Direction) -> Result<i64> {
    if delta.abs() != 1 {
        return Err(Error::Domain(format!("δ = {delta} must be ±1")));
    }
    Ok(match direction {
        Direction::LFromMoved => sigma_known + delta * ratio_sign(nabla_l, nabla_lpp, 0)?,
        Direction::MovedFromL => sigma_known - delta * ratio_sign(nabla_lpp, nabla_l, 0)?,
    })
}

/// The Levine–Tristram signature of the right-hand trefoil `K` at `ω`,
/// from the unknot `K''` through the positive Hopf link `L'`, using
/// `Δ_K = t - 1 + t^{-1}`, `Δ_{L'} = t^{1/2} - t^{-1/2}` and `Δ_{K''} = 1`:
/// `σ_K = σ_{K''} - sgn(i Δ_{L'}/Δ_K) + sgn(i Δ_{L'}/Δ_{K''})`. Points
/// where `Δ_K(ω) = 0` are rejected.
pub fn levine_tristram_recursion_demo(omega: Coord) -> Result<i64> {
    let point = TorusPoint::new(vec![omega])?;
    let delta_k = eval_at(&LaurentPoly::parse("t - 1 + t^-1", 1)?, &point)?;
    let delta_hopf = eval_at(&LaurentPoly::parse("t^(1/2) - t^(-1/2)", 1)?, &point)?;
    let delta_unknot = eval_at(&LaurentPoly::one(1), &point)?;
    let sigma_hopf = local_move_a(0, &delta_hopf, &delta_unknot, Direction::LFromMoved)?;
    Ok(sigma_hopf - ratio_sign(&delta_hopf, &delta_k, 1)?)
}

/// The congruence `σ_L(ω) ≡ ν + ℓ - sgn(i^ν ∇_L(ω^{1/2})) (mod 4)` at a
/// point with `η_L(ω) = 0`.
pub fn mod4_check(m: &ColoredLinkModel, omega: &TorusPoint) -> Result<bool> {
    let r = m.signature(omega)?;
    if r.eta != 0 {
        return Err(Error::Inapplicable(format!("η = {} at {omega}", r.eta)));
    }
    let nabla = potential_at(m, omega)?;
    let one = match &nabla {
        Value::Exact(x) => Value::Exact(CyclotomicElement::one(x.field())),
        Value::Approx(_) => Value::Approx(Complex64::new(1.0, 0.0)),
    };
    let s = ratio_sign(&nabla, &one, m.nu as i64)?;
    Ok((r.sigma - (m.nu as i64 + m.cross_color_linking() - s)).rem_euclid(4) == 0)
}

/// Whether `η_L(ω) = 0 ⇔ ∇_L(ω^{1/2}) ≠ 0` holds at `ω`.
pub fn nullity_potential_equivalence(m: &ColoredLinkModel, omega: &TorusPoint) -> Result<bool> {
    let r = m.signature(omega)?;
    let nabla = potential_at(m, omega)?;
    Ok((r.eta == 0) == !nabla.is_zero_within(DEFAULT_TOLERANCE))
}

//! Property checks run over the exact grid of a model.

use std::fmt;

use num_rational::BigRational;

use crate::conway::{evaluate_at_half_point, mod4_check, potential};
use crate::error::Result;
use crate::invariants::{delta0, grid_scan, hermitian_at, SignatureResult, SignatureSource};
use crate::model::{apply_hermitian_move, bundled, mirror, ColoredLinkModel, HermitianMoveSpec};
use crate::numeric::{eval_at, CyclotomicElement, HermitianMatrix, TorusPoint, DEFAULT_TOLERANCE};

/// Outcome of one property over a set of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// Up to five failing cases.
    pub counterexamples: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} points)", self.name, self.checked)
        } else {
            write!(f, "FAIL {} ({} of {} points)", self.name, self.failures, self.checked)?;
            for c in &self.counterexamples {
                write!(f, "\n    {c}")?;
            }
            Ok(())
        }
    }
}

struct Check {
    outcome: CheckOutcome,
}

impl Check {
    fn new(name: &str) -> Self {
        Self { outcome: CheckOutcome { name: name.into(), checked: 0, failures: 0, counterexamples: Vec::new() } }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.outcome.checked += 1;
        if !ok {
            self.outcome.failures += 1;
            if self.outcome.counterexamples.len() < 5 {
                self.outcome.counterexamples.push(detail());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }
}

fn sgn(x: f64) -> i64 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// The closed forms known for two bundled models.
fn closed_form(name: &str, omega: &TorusPoint) -> Option<(i64, usize)> {
    let a = omega.angles();
    match name {
        "trefoil" => {
            let x = 2.0 * a[0].cos() - 1.0;
            Some(if x.abs() < 1e-12 { (-1, 1) } else { (sgn(x) - 1, 0) })
        }
        "clasp2" => {
            let z = (1.0 - a[0].cos(), -a[0].sin());
            let w = (1.0 - a[1].cos(), -a[1].sin());
            let re = z.0 * w.0 - z.1 * w.1;
            let on_zero_locus = ((a[0] + a[1]) / std::f64::consts::PI - 1.0).rem_euclid(2.0).abs() < 1e-12;
            Some(if on_zero_locus { (0, 1) } else { (-sgn(re), 0) })
        }
        _ => None,
    }
}

fn bundled_twin(m: &ColoredLinkModel) -> Option<&'static str> {
    ["trefoil", "clasp2"].into_iter().find(|n| bundled(n).map(|b| &b == m).unwrap_or(false))
}

/// A deterministic elementary enlargement of `h`.
fn enlargement_for(h: &HermitianMatrix, seed: usize) -> Option<HermitianMoveSpec> {
    let HermitianMatrix::Exact(h) = h else {
        return None;
    };
    let field = h.field();
    let xi = (0..h.size()).map(|i| CyclotomicElement::zeta_pow(field, (seed + i) as i64)).collect();
    let lambda = BigRational::from_integer(((seed % 7) as i64 - 3).into());
    let alpha = &CyclotomicElement::one(field) + &CyclotomicElement::from_integer(field, (seed % 3) as i64 + 1);
    HermitianMoveSpec::enlargement(xi, lambda, alpha).ok()
}

/// Runs every applicable property on the grid of order `q`. Validation
/// comes first; an invalid model is reported without evaluating anything.
pub fn verify_model(m: &ColoredLinkModel, q: u64) -> Result<Vec<CheckOutcome>> {
    let mut validation = Check::new("validation");
    let violations = m.validate();
    validation.outcome.checked = 1;
    if !violations.is_empty() {
        validation.outcome.failures = 1;
        validation.outcome.counterexamples = violations.iter().map(ToString::to_string).collect();
        return Ok(vec![validation.outcome]);
    }

    let grid = grid_scan(m, q)?;
    let mirrored = mirror(m);
    let ell = m.cross_color_linking();
    let connected = m.beta0_s == 1;
    let nabla = if connected && m.chi_complement.is_some() { potential(m).ok() } else { None };
    let delta = if connected { delta0(m).ok() } else { None };
    let twin = bundled_twin(m);

    let mut conj = Check::new("conjugation symmetry");
    let mut mirror_check = Check::new("mirror antisymmetry");
    let mut parity55 = Check::new("signature and nullity parity");
    let mut det55 = Check::new("determinant sign mod 4");
    let mut parity56 = Check::new("signature and nullity mod 2 congruence");
    let mut enlarge = Check::new("enlargement invariance");
    let mut vanishing = Check::new("delta0 vanishing equivalence");
    let mut lemma58 = Check::new("nullity and potential vanishing equivalence");
    let mut lemma57 = Check::new("potential mod 4 congruence");
    let mut closed = Check::new("closed form");

    for (idx, r) in grid.rows.iter().enumerate() {
        let omega = &r.point;
        let at = || format!("at {omega}");
        let same = |a: &SignatureResult, b: &SignatureResult| (a.sigma, a.eta) == (b.sigma, b.eta);

        conj.record_result(m.signature(&omega.conjugate()).map(|c| same(&c, r)), at);
        mirror_check.record_result(
            mirrored.signature(omega).map(|x| x.sigma == -r.sigma && x.eta == r.eta),
            at,
        );
        let h = hermitian_at(m, omega, DEFAULT_TOLERANCE)?;
        let n = h.size() as i64;
        parity55.record((r.sigma + r.raw_nullity as i64 - n).rem_euclid(2) == 0, at);
        if r.raw_nullity == 0 {
            if let HermitianMatrix::Exact(e) = &h {
                let ok = e.determinant().and_then(|d| d.sign()).map(|s| ((r.sigma - n).rem_euclid(4) == 0) == (s > 0));
                det55.record_result(ok, at);
            }
        }
        parity56.record((r.sigma + r.eta as i64 - m.nu as i64 - ell - 1).rem_euclid(2) == 0, || {
            format!("at {omega}: sigma={} eta={}", r.sigma, r.eta)
        });
        if idx < 10 {
            if let Some(spec) = enlargement_for(&h, idx) {
                let ok = match &h {
                    HermitianMatrix::Exact(e) => apply_hermitian_move(e, &spec)
                        .and_then(|big| big.signature_nullity())
                        .map(|s| s == (r.sigma, r.raw_nullity)),
                    HermitianMatrix::Approx(_) => Ok(true),
                };
                enlarge.record_result(ok, at);
            }
        }
        if let Some(d) = &delta {
            let ok = eval_at(d, omega).map(|v| v.is_zero_within(DEFAULT_TOLERANCE) == (r.raw_nullity >= 1));
            vanishing.record_result(ok, at);
        }
        if let Some(f) = &nabla {
            let ok = evaluate_at_half_point(f, omega)
                .map(|v| (r.eta == 0) == !v.is_zero_within(DEFAULT_TOLERANCE));
            lemma58.record_result(ok, at);
            if r.eta == 0 {
                lemma57.record_result(mod4_check(m, omega), at);
            }
        }
        if let Some(name) = twin {
            if let Some(expected) = closed_form(name, omega) {
                closed.record((r.sigma, r.eta) == expected, || {
                    format!("at {omega}: got ({}, {}), expected {expected:?}", r.sigma, r.eta)
                });
            }
        }
    }

    let mut out = vec![validation.outcome, conj.outcome, mirror_check.outcome, parity55.outcome];
    for c in [det55, parity56, enlarge, vanishing, lemma58, lemma57, closed] {
        if c.outcome.checked > 0 {
            out.push(c.outcome);
        }
    }
    Ok(out)
}

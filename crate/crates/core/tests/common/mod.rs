//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use astro_float::{BigFloat, Consts, RoundingMode};
use clasp::conway::{local_move_b, potential_at, Direction};
use clasp::invariants::{hermitian_at, signature, SignatureResult};
use clasp::model::{
    apply_hermitian_move, bundled, bundled_names, connected_sum, disjoint_sum, mirror, ColoredLinkModel,
    HermitianMoveSpec, IntMatrix, SeifertFamily,
};
use clasp::numeric::{CyclotomicElement, HermitianMatrix, TorusPoint, DEFAULT_TOLERANCE};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(s: &str) -> TorusPoint {
    TorusPoint::parse(s).unwrap()
}

pub const PRIME_POWERS: [(u64, u64); 12] =
    [(2, 2), (3, 3), (4, 2), (5, 5), (7, 7), (8, 2), (9, 3), (11, 11), (13, 13), (16, 2), (25, 5), (27, 3)];

/// A point of `T^μ_𝒫`: every coordinate a `q`-th root of unity other than 1,
/// `q` a prime power, with at least one coordinate of order exactly `q`.
pub fn random_prime_power_point(rng: &mut ChaCha8Rng, mu: usize) -> TorusPoint {
    let (q, p) = PRIME_POWERS[rng.gen_range(0..PRIME_POWERS.len())];
    loop {
        let ks: Vec<u64> = (0..mu).map(|_| rng.gen_range(1..q)).collect();
        if ks.iter().any(|k| k % p != 0) {
            let spec = ks.iter().map(|k| format!("{k}/{q}")).collect::<Vec<_>>().join(",");
            return pt(&spec);
        }
    }
}

/// A random exact point of `T^μ_*` whose coordinates share a denominator
/// of at most `max_q`.
pub fn random_exact_point(rng: &mut ChaCha8Rng, mu: usize, max_q: u64) -> TorusPoint {
    let q = rng.gen_range(2..=max_q);
    point_with_denominator(rng, mu, q)
}

pub fn point_with_denominator(rng: &mut ChaCha8Rng, mu: usize, q: u64) -> TorusPoint {
    let spec = (0..mu).map(|_| format!("{}/{q}", rng.gen_range(1..q))).collect::<Vec<_>>().join(",");
    pt(&spec)
}

/// A random family obeying `A^{-ε} = (A^ε)^T`. With `degenerate`, the last
/// basis vector duplicates the first in every matrix, forcing a kernel.
pub fn random_family(rng: &mut ChaCha8Rng, mu: usize, n: usize, degenerate: bool) -> SeifertFamily {
    let full = (1usize << mu) - 1;
    let mut mats: Vec<IntMatrix> = vec![Vec::new(); 1 << mu];
    for mask in 0..=full {
        if mask > mask ^ full {
            continue;
        }
        let mut a: IntMatrix = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        if degenerate && n >= 2 {
            for row in a.iter_mut() {
                row[n - 1] = row[0];
            }
            a[n - 1] = a[0].clone();
        }
        mats[mask ^ full] = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        mats[mask] = a;
    }
    SeifertFamily::new(mu, mats).unwrap()
}

/// A model around a bare family: one component per color, unlinked.
pub fn model_from_family(seifert: SeifertFamily) -> ColoredLinkModel {
    let mu = seifert.mu();
    ColoredLinkModel {
        mu,
        nu: mu,
        colors: (1..=mu).collect(),
        linking_matrix: vec![vec![0; mu]; mu],
        seifert,
        beta0_s: 1,
        clasp_count: 0,
        chi_complement: None,
        basis_split: None,
    }
}

/// Signature and nullity of `H(ω)` from eigenvalues of its real `2n × 2n`
/// embedding, computed by cyclic Jacobi rotations in 256-bit arithmetic.
pub mod oracle {
    use super::*;

    const P: usize = 256;
    const RM: RoundingMode = RoundingMode::ToEven;

    struct Ctx {
        cc: Consts,
    }

    impl Ctx {
        fn int(&self, v: i64) -> BigFloat {
            BigFloat::from_i64(v, P)
        }
        fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
            a.add(b, P, RM)
        }
        fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
            a.sub(b, P, RM)
        }
        fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
            a.mul(b, P, RM)
        }
        fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
            a.div(b, P, RM)
        }
        fn sqrt(&self, a: &BigFloat) -> BigFloat {
            a.sqrt(P, RM)
        }
    }

    /// `(cos 2πk/q, sin 2πk/q)`.
    fn root_of_unity(ctx: &mut Ctx, k: u64, q: u64) -> (BigFloat, BigFloat) {
        let two_pi = ctx.cc.pi(P, RM).mul(&BigFloat::from_i64(2, P), P, RM);
        let theta = two_pi.mul(&BigFloat::from_u64(k, P), P, RM).div(&BigFloat::from_u64(q, P), P, RM);
        (theta.cos(P, RM, &mut ctx.cc), theta.sin(P, RM, &mut ctx.cc))
    }

    pub fn signature_nullity(family: &SeifertFamily, omega: &TorusPoint) -> (i64, usize) {
        let mut ctx = Ctx { cc: Consts::new().expect("constants cache") };
        let n = family.size();
        let mu = family.mu();
        let pairs = omega.exact_pairs().expect("oracle needs an exact point");
        let roots: Vec<(BigFloat, BigFloat)> = pairs.iter().map(|&(k, q)| root_of_unity(&mut ctx, k, q)).collect();

        // H = Σ_ε ∏_i (1 - ω_i^{∓1}) A^ε: conj(ω_i) where ε_i = +, ω_i where ε_i = -.
        let zero = ctx.int(0);
        let mut re = vec![zero.clone(); n * n];
        let mut im = vec![zero.clone(); n * n];
        for mask in 0..1usize << mu {
            let (mut cr, mut ci) = (ctx.int(1), ctx.int(0));
            for (i, (c, s)) in roots.iter().enumerate() {
                let fr = ctx.sub(&ctx.int(1), c);
                let fi = if mask >> i & 1 == 0 { s.clone() } else { s.neg() };
                let nr = ctx.sub(&ctx.mul(&cr, &fr), &ctx.mul(&ci, &fi));
                let ni = ctx.add(&ctx.mul(&cr, &fi), &ctx.mul(&ci, &fr));
                cr = nr;
                ci = ni;
            }
            let a = family.get(mask);
            for i in 0..n {
                for j in 0..n {
                    if a[i][j] != 0 {
                        let v = ctx.int(a[i][j]);
                        re[i * n + j] = ctx.add(&re[i * n + j], &ctx.mul(&cr, &v));
                        im[i * n + j] = ctx.add(&im[i * n + j], &ctx.mul(&ci, &v));
                    }
                }
            }
        }

        let m = 2 * n;
        let mut s = vec![zero.clone(); m * m];
        for i in 0..n {
            for j in 0..n {
                s[i * m + j] = re[i * n + j].clone();
                s[(i + n) * m + j + n] = re[i * n + j].clone();
                s[(i + n) * m + j] = im[i * n + j].clone();
                s[i * m + j + n] = im[i * n + j].neg();
            }
        }
        let eig = jacobi_eigenvalues(&ctx, s, m);

        let scale = eig.iter().fold(ctx.int(1), |acc, e| if e.abs().cmp(&acc) == Some(1) { e.abs() } else { acc });
        let threshold = ctx.mul(&scale, &BigFloat::from_f64(1e-50, P));
        let (mut pos, mut neg, mut null) = (0i64, 0i64, 0usize);
        for e in &eig {
            if e.abs().cmp(&threshold) != Some(1) {
                null += 1;
            } else if e.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        assert!(pos % 2 == 0 && neg % 2 == 0 && null % 2 == 0, "embedding eigenvalues come in pairs");
        ((pos - neg) / 2, null / 2)
    }

    fn jacobi_eigenvalues(ctx: &Ctx, mut a: Vec<BigFloat>, m: usize) -> Vec<BigFloat> {
        let frob = a.iter().fold(ctx.int(0), |acc, x| ctx.add(&acc, &ctx.mul(x, x)));
        let tiny = ctx.mul(&frob, &BigFloat::from_f64(1e-120, P));
        let negligible = ctx.mul(&frob.sqrt(P, RM), &BigFloat::from_f64(1e-70, P));
        for _sweep in 0..60 {
            let off = (0..m)
                .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| i * m + j))
                .fold(ctx.int(0), |acc, idx| ctx.add(&acc, &ctx.mul(&a[idx], &a[idx])));
            if off.cmp(&tiny) != Some(1) {
                break;
            }
            for p in 0..m {
                for q in p + 1..m {
                    let apq = a[p * m + q].clone();
                    if apq.abs().cmp(&negligible) != Some(1) {
                        continue;
                    }
                    let theta = ctx.div(&ctx.sub(&a[q * m + q], &a[p * m + p]), &ctx.mul(&ctx.int(2), &apq));
                    let root = ctx.sqrt(&ctx.add(&ctx.mul(&theta, &theta), &ctx.int(1)));
                    let mut t = ctx.div(&ctx.int(1), &ctx.add(&theta.abs(), &root));
                    if theta.is_negative() {
                        t = t.neg();
                    }
                    let c = ctx.div(&ctx.int(1), &ctx.sqrt(&ctx.add(&ctx.mul(&t, &t), &ctx.int(1))));
                    let s = ctx.mul(&t, &c);
                    for k in 0..m {
                        let akp = a[k * m + p].clone();
                        let akq = a[k * m + q].clone();
                        a[k * m + p] = ctx.sub(&ctx.mul(&c, &akp), &ctx.mul(&s, &akq));
                        a[k * m + q] = ctx.add(&ctx.mul(&s, &akp), &ctx.mul(&c, &akq));
                    }
                    for k in 0..m {
                        let apk = a[p * m + k].clone();
                        let aqk = a[q * m + k].clone();
                        a[p * m + k] = ctx.sub(&ctx.mul(&c, &apk), &ctx.mul(&s, &aqk));
                        a[q * m + k] = ctx.add(&ctx.mul(&s, &apk), &ctx.mul(&c, &aqk));
                    }
                }
            }
        }
        (0..m).map(|i| a[i * m + i].clone()).collect()
    }
}

/// Compares the exact engine with the oracle on `count` random instances and
/// returns the disagreements.
pub fn oracle_disagreements(seed: u64, count: usize) -> Vec<String> {
    let mut rng = rng(seed);
    let cases: Vec<(SeifertFamily, TorusPoint)> = (0..count)
        .map(|_| {
            let mu = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=8);
            let degenerate = rng.gen_range(0..4) == 0;
            let family = random_family(&mut rng, mu, n, degenerate);
            (family, random_prime_power_point(&mut rng, mu))
        })
        .collect();
    cases
        .par_iter()
        .enumerate()
        .filter_map(|(case, (family, omega))| {
            let model = model_from_family(family.clone());
            let h = hermitian_at(&model, omega, DEFAULT_TOLERANCE).unwrap();
            assert!(h.is_exact());
            let engine = h.signature_nullity().unwrap();
            let expected = oracle::signature_nullity(family, omega);
            (engine != expected).then(|| {
                format!("case {case}: n={} at {omega}: engine {engine:?}, oracle {expected:?}", family.size())
            })
        })
        .collect()
}

/// `sgn(2cos(2πk/q) - 1) - 1`, with `(-1, 1)` on the zero locus of `Δ`.
pub fn trefoil_closed_form(k: u64, q: u64) -> (i64, usize) {
    if 6 * k == q || 6 * k == 5 * q {
        (-1, 1)
    } else if 6 * k < q || 6 * k > 5 * q {
        (0, 0)
    } else {
        (-2, 0)
    }
}

/// `sgn(-Re((1-ω₁)(1-ω₂)))` and the indicator of `ω₁ω₂ = -1`. The real part
/// equals `-4 sin(πk₁/q) sin(πk₂/q) cos(π(k₁+k₂)/q)`, so only the cosine
/// factor decides the sign.
pub fn clasp2_closed_form(k1: u64, k2: u64, q: u64) -> (i64, usize) {
    let s = k1 + k2;
    if 2 * s == q || 2 * s == 3 * q {
        (0, 1)
    } else if 2 * s < q || 2 * s > 3 * q {
        (1, 0)
    } else {
        (-1, 0)
    }
}

fn random_cyclotomic(rng: &mut ChaCha8Rng, field: &std::sync::Arc<clasp::numeric::CyclotomicField>) -> CyclotomicElement {
    let mut x = CyclotomicElement::zero(field);
    for _ in 0..3 {
        let c = CyclotomicElement::from_integer(field, rng.gen_range(-3..=3));
        x = &x + &(&c * &CyclotomicElement::zeta_pow(field, rng.gen_range(0..field.order() as i64)));
    }
    x
}

/// Applies `moves` random enlargements to `H(ω)` of bundled models at
/// `points` random prime-power points, returning every move that changed
/// `(σ, null)`.
pub fn enlargement_failures(seed: u64, moves: usize, points: usize) -> Vec<String> {
    let mut rng = rng(seed);
    let names = bundled_names();
    let targets: Vec<(String, ColoredLinkModel, TorusPoint)> = (0..points)
        .map(|_| {
            let name = names[rng.gen_range(0..names.len())];
            let m = bundled(name).unwrap();
            let omega = random_prime_power_point(&mut rng, m.mu);
            (name.to_string(), m, omega)
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..moves {
        let (name, m, omega) = &targets[i % points];
        let HermitianMatrix::Exact(h) = hermitian_at(m, omega, DEFAULT_TOLERANCE).unwrap() else {
            panic!("prime-power points are exact");
        };
        let before = h.signature_nullity().unwrap();
        let field = h.field().clone();
        let xi = (0..h.size()).map(|_| random_cyclotomic(&mut rng, &field)).collect();
        let lambda = BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=4)));
        let alpha = loop {
            let a = random_cyclotomic(&mut rng, &field);
            if !a.is_zero() {
                break a;
            }
        };
        let spec = HermitianMoveSpec::enlargement(xi, lambda, alpha).unwrap();
        let big = apply_hermitian_move(&h, &spec).unwrap();
        let after = big.signature_nullity().unwrap();
        if before != after {
            out.push(format!("move {i} on {name} at {omega}: {before:?} -> {after:?}"));
        }
        let back = apply_hermitian_move(&big, &clasp::model::HermitianMoveSpec::reduction()).unwrap();
        if back != h {
            out.push(format!("move {i} on {name} at {omega}: reduction did not undo the enlargement"));
        }
    }
    out
}

fn sig(m: &ColoredLinkModel, omega: &TorusPoint) -> SignatureResult {
    signature(m, omega).unwrap()
}

/// Mirror antisymmetry over a random sample of every bundled model.
pub fn mirror_failures(seed: u64, per_model: usize) -> (usize, Vec<String>) {
    let mut rng = rng(seed);
    let mut checked = 0;
    let mut out = Vec::new();
    for name in bundled_names() {
        let m = bundled(name).unwrap();
        let mm = mirror(&m);
        for _ in 0..per_model {
            let omega = random_exact_point(&mut rng, m.mu, 12);
            let (a, b) = (sig(&m, &omega), sig(&mm, &omega));
            checked += 1;
            if b.sigma != -a.sigma || b.eta != a.eta {
                out.push(format!("{name} at {omega}: ({}, {}) vs mirror ({}, {})", a.sigma, a.eta, b.sigma, b.eta));
            }
        }
    }
    (checked, out)
}

fn join(parts: &[String]) -> String {
    parts.join(",")
}

fn coords(omega: &TorusPoint) -> Vec<String> {
    omega.to_string().split(',').map(str::to_string).collect()
}

/// Connected-sum and disjoint-sum additivity over every ordered pair of
/// bundled models with at most five colors in total.
pub fn sum_failures(seed: u64, per_pair: usize) -> (usize, Vec<String>) {
    let mut rng = rng(seed);
    let mut checked = 0;
    let mut out = Vec::new();
    for a_name in bundled_names() {
        for b_name in bundled_names() {
            let (a, b) = (bundled(a_name).unwrap(), bundled(b_name).unwrap());
            if a.mu + b.mu > 5 {
                continue;
            }
            let conn = connected_sum(&a, &b, 1, 1).unwrap();
            let disj = disjoint_sum(&a, &b).unwrap();
            for _ in 0..per_pair {
                let wa = random_exact_point(&mut rng, a.mu, 10);
                let q = wa.exact_pairs().unwrap()[0].1;
                let wb_rest = point_with_denominator(&mut rng, b.mu, q);
                let ca = coords(&wa);
                let mut cb = coords(&wb_rest);
                cb[0] = ca[0].clone();
                let wb = pt(&join(&cb));
                let (ra, rb) = (sig(&a, &wa), sig(&b, &wb));

                let mut c_sum = ca.clone();
                c_sum.extend(cb[1..].iter().cloned());
                let rc = sig(&conn, &pt(&join(&c_sum)));
                checked += 1;
                if rc.sigma != ra.sigma + rb.sigma || rc.eta != ra.eta + rb.eta {
                    out.push(format!(
                        "{a_name} # {b_name} at {wa} | {wb}: ({}, {}) from ({}, {}) and ({}, {})",
                        rc.sigma, rc.eta, ra.sigma, ra.eta, rb.sigma, rb.eta
                    ));
                }

                let wb2 = wb_rest;
                let rb2 = sig(&b, &wb2);
                let mut d = ca.clone();
                d.extend(coords(&wb2));
                let rd = sig(&disj, &pt(&join(&d)));
                checked += 1;
                if rd.sigma != ra.sigma + rb2.sigma || rd.eta != ra.eta + rb2.eta + 1 {
                    out.push(format!(
                        "{a_name} + {b_name} at {wa} | {wb2}: ({}, {}) from ({}, {}) and ({}, {})",
                        rd.sigma, rd.eta, ra.sigma, ra.eta, rb2.sigma, rb2.eta
                    ));
                }
            }
        }
    }
    (checked, out)
}

/// Recomputes σ of clasp2 from hopf2 through a crossing change between the
/// two colors at every point of the `q` grid where both potentials are
/// nonzero; returns `(checked, failures)`.
pub fn clasp2_from_hopf2(q: u64) -> (usize, Vec<String>) {
    let clasp = bundled("clasp2").unwrap();
    let hopf = bundled("hopf2").unwrap();
    let mut checked = 0;
    let mut out = Vec::new();
    for k1 in 1..q {
        for k2 in 1..q {
            let omega = pt(&format!("{k1}/{q},{k2}/{q}"));
            let a = potential_at(&clasp, &omega).unwrap();
            let b = potential_at(&hopf, &omega).unwrap();
            if a.is_zero_within(0.0) || b.is_zero_within(0.0) {
                continue;
            }
            checked += 1;
            let via = local_move_b(sig(&hopf, &omega).sigma, &a, &b, 1, Direction::LFromMoved);
            let direct = sig(&clasp, &omega).sigma;
            match via {
                Ok(s) if s == direct => {}
                other => out.push(format!("at {omega}: local move gives {other:?}, engine gives {direct}")),
            }
        }
    }
    (checked, out)
}

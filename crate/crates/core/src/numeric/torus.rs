use std::f64::consts::TAU;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// One coordinate of a torus point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Coord {
    /// `e^{2πi k/q}` with `0 < k < q` and `gcd(k, q) = 1`.
    Exact { k: u64, q: u64 },
    /// `e^{iθ}` with `0 < θ < 2π`.
    Approx(f64),
}

impl Coord {
    /// Reduces `k/q` to lowest terms in `(0, 1)`. A coordinate equal to 1
    /// lies outside the open torus and is rejected.
    pub fn exact(k: i64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Parse("root of unity of order 0".into()));
        }
        let r = k.rem_euclid(q as i64) as u64;
        if r == 0 {
            return Err(Error::Domain(format!("coordinate {k}/{q} equals 1")));
        }
        let g = r.gcd(&q);
        Ok(Coord::Exact { k: r / g, q: q / g })
    }

    pub fn approx(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::Parse(format!("angle {theta} is not finite")));
        }
        let t = theta.rem_euclid(TAU);
        if t == 0.0 {
            return Err(Error::Domain("angle is a multiple of 2π, so the coordinate equals 1".into()));
        }
        Ok(Coord::Approx(t))
    }

    pub fn angle(&self) -> f64 {
        match *self {
            Coord::Exact { k, q } => TAU * k as f64 / q as f64,
            Coord::Approx(t) => t,
        }
    }

    /// Multiplicative order, for exact coordinates.
    pub fn order(&self) -> Option<u64> {
        match *self {
            Coord::Exact { q, .. } => Some(q),
            Coord::Approx(_) => None,
        }
    }

    pub fn conjugate(&self) -> Self {
        match *self {
            Coord::Exact { k, q } => Coord::Exact { k: q - k, q },
            Coord::Approx(t) => Coord::Approx(TAU - t),
        }
    }

    /// The branch `e^{iθ/2}` of the square root, `0 < θ < 2π`.
    pub fn half(&self) -> Self {
        match *self {
            Coord::Exact { k, q } => {
                let g = k.gcd(&(2 * q));
                Coord::Exact { k: k / g, q: 2 * q / g }
            }
            Coord::Approx(t) => Coord::Approx(t / 2.0),
        }
    }

    /// Exact product of two exact coordinates, `None` if the product is 1
    /// or either factor is approximate.
    pub fn mul_exact(&self, other: &Self) -> Option<Self> {
        match (*self, *other) {
            (Coord::Exact { k: a, q: p }, Coord::Exact { k: b, q: r }) => {
                let l = p.lcm(&r);
                Coord::exact((a * (l / p) + b * (l / r)) as i64, l).ok()
            }
            _ => None,
        }
    }

    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('~') {
            let t: f64 = rest.trim().parse().map_err(|_| Error::Parse(format!("bad angle '{rest}'")))?;
            return Coord::approx(t);
        }
        let (k, q) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("coordinate '{s}' is neither k/q nor ~radians")))?;
        let k: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad numerator '{k}'")))?;
        let q: u64 = q.trim().parse().map_err(|_| Error::Parse(format!("bad denominator '{q}'")))?;
        Coord::exact(k, q)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Exact { k, q } => write!(f, "{k}/{q}"),
            Coord::Approx(t) => write!(f, "~{t}"),
        }
    }
}

/// A point of the open torus `T^μ_*`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint {
    coords: Vec<Coord>,
}

/// Membership flags of a torus point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub in_t_star: bool,
    /// All coordinates are roots of unity.
    pub in_t_q: bool,
    /// All coordinate orders are powers of one prime.
    pub in_t_p: bool,
    /// Least common multiple of the coordinate orders.
    pub conductor: Option<u64>,
    pub prime: Option<u64>,
}

impl TorusPoint {
    pub fn new(coords: Vec<Coord>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Dimension("torus point with no coordinates".into()));
        }
        Ok(Self { coords })
    }

    /// Exact point from `(k, q)` pairs.
    pub fn exact(pairs: &[(i64, u64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(k, q)| Coord::exact(k, q)).collect::<Result<_>>()?)
    }

    /// The diagonal point `(ω, …, ω)`.
    pub fn diagonal(c: Coord, mu: usize) -> Result<Self> {
        Self::new(vec![c; mu])
    }

    /// Parses `k/q,...` or `~radians,...`, mixed freely.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.split(',').map(Coord::parse).collect::<Result<_>>()?)
    }

    pub fn mu(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn is_exact(&self) -> bool {
        self.coords.iter().all(|c| matches!(c, Coord::Exact { .. }))
    }

    pub fn angles(&self) -> Vec<f64> {
        self.coords.iter().map(Coord::angle).collect()
    }

    /// Lcm of the coordinate orders, if the point is exact.
    pub fn conductor(&self) -> Option<u64> {
        self.coords.iter().try_fold(1u64, |acc, c| c.order().map(|q| acc.lcm(&q)))
    }

    pub fn classify(&self) -> Classification {
        let conductor = self.conductor();
        let prime = conductor.and_then(|_| {
            let mut common: Option<u64> = None;
            for c in &self.coords {
                let p = prime_of_power(c.order()?)?;
                match common {
                    None => common = Some(p),
                    Some(x) if x == p => {}
                    Some(_) => return None,
                }
            }
            common
        });
        Classification {
            in_t_star: true,
            in_t_q: conductor.is_some(),
            in_t_p: prime.is_some(),
            conductor,
            prime,
        }
    }

    pub fn conjugate(&self) -> Self {
        Self { coords: self.coords.iter().map(Coord::conjugate).collect() }
    }

    /// Coordinate-wise square root `e^{iθ/2}`.
    pub fn half_point(&self) -> Self {
        Self { coords: self.coords.iter().map(Coord::half).collect() }
    }

    /// The point made of the listed coordinates, in that order.
    pub fn project(&self, keep: &[usize]) -> Result<Self> {
        Self::new(keep.iter().map(|&i| self.coords[i]).collect())
    }

    /// Coordinates as `(k, q)` pairs, if exact.
    pub fn exact_pairs(&self) -> Option<Vec<(u64, u64)>> {
        self.coords
            .iter()
            .map(|c| match *c {
                Coord::Exact { k, q } => Some((k, q)),
                Coord::Approx(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TorusPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The prime `p` when `n = p^k` with `k ≥ 1`.
pub fn prime_of_power(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > n {
        return Some(n);
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

use std::fmt::Write as _;

use rayon::prelude::*;

use super::signature::{SignatureResult, SignatureSource};
use crate::error::{Error, Result};
use crate::numeric::{Coord, TorusPoint};

/// Largest number of points a scan may visit.
pub const GRID_LIMIT: u64 = 10_000_000;

/// Signatures at all points `(k_1/q, …, k_μ/q)` with `0 < k_i < q`, in
/// lexicographic order of `(k_1, …, k_μ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridScan {
    pub model_id: Option<String>,
    pub q: u64,
    pub mu: usize,
    pub rows: Vec<SignatureResult>,
}

/// Grid numerators `k` of the `index`-th point in lexicographic order.
fn numerators(mut index: u64, q: u64, mu: usize) -> Vec<u64> {
    let mut ks = vec![0; mu];
    for slot in ks.iter_mut().rev() {
        *slot = index % (q - 1) + 1;
        index /= q - 1;
    }
    ks
}

fn grid_point(ks: &[u64], q: u64) -> Result<TorusPoint> {
    TorusPoint::new(ks.iter().map(|&k| Coord::exact(k as i64, q)).collect::<Result<_>>()?)
}

pub fn grid_scan<S: SignatureSource + ?Sized>(src: &S, q: u64) -> Result<GridScan> {
    if q < 2 {
        return Err(Error::Domain(format!("grid order {q} must be at least 2")));
    }
    let mu = src.mu();
    let count = (q - 1)
        .checked_pow(mu as u32)
        .filter(|&c| c <= GRID_LIMIT)
        .ok_or_else(|| Error::Limit(format!("a grid of order {q} on {mu} colors exceeds {GRID_LIMIT} points")))?;
    let rows = (0..count)
        .into_par_iter()
        .map(|i| src.signature(&grid_point(&numerators(i, q, mu), q)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(GridScan { model_id: None, q, mu, rows })
}

impl GridScan {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.model_id = Some(id.into());
        self
    }

    /// Grid numerators of row `i`.
    pub fn numerators(&self, i: usize) -> Vec<u64> {
        numerators(i as u64, self.q, self.mu)
    }

    /// CSV with header `k1,...,kmu,q,sigma,eta,raw_nullity,exact`; the
    /// numerators are on the common denominator `q` and `exact` is 1 or 0.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.mu {
            let _ = write!(out, "k{i},");
        }
        out.push_str("q,sigma,eta,raw_nullity,exact\n");
        for (i, r) in self.rows.iter().enumerate() {
            for k in self.numerators(i) {
                let _ = write!(out, "{k},");
            }
            let _ = writeln!(out, "{},{},{},{},{}", self.q, r.sigma, r.eta, r.raw_nullity, u8::from(r.exact));
        }
        out
    }
}

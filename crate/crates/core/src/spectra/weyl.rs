use serde::Serialize;

use super::corollary::{t_matrix, t_plus_a, TReading};
use super::SpectrumMultiset;
use crate::builder::build_h;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::LoopPolicy;
use crate::linalg::{numeric_spectrum, Method};

/// Slack for comparisons against numerically computed eigenvalues.
pub const BOUND_SLACK: f64 = 1e-8;

/// Weyl bounds on `lambda_i(A + B)` from descending spectra of A and B
/// (1-based i): upper is the min of `a_j + b_k` over `j + k = i + 1`, lower
/// the max of `a_l + b_h` over `l + h = i + d`.
pub fn weyl_interval_f64(a: &[f64], b: &[f64], i: usize) -> Result<(f64, f64)> {
    let d = a.len();
    if b.len() != d {
        return Err(Error::SizeMismatch {
            expected: d,
            found: b.len(),
        });
    }
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange { index: i, len: d });
    }
    let upper = (1..=i)
        .map(|j| a[j - 1] + b[i - j])
        .fold(f64::INFINITY, f64::min);
    let lower = (i..=d)
        .map(|l| a[l - 1] + b[i + d - l - 1])
        .fold(f64::NEG_INFINITY, f64::max);
    Ok((lower, upper))
}

pub fn weyl_interval(a: &SpectrumMultiset, b: &SpectrumMultiset, i: usize) -> Result<(f64, f64)> {
    weyl_interval_f64(&a.to_f64_desc(), &b.to_f64_desc(), i)
}

/// A bound `lower <= alpha_i <= upper` for `first <= i <= last` (1-based,
/// inclusive; empty when `first > last`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenBound {
    pub item: usize,
    pub first: usize,
    pub last: usize,
    pub lower: i64,
    pub upper: i64,
}

impl EigenBound {
    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last
    }

    pub fn is_empty(&self) -> bool {
        self.first > self.last
    }
}

/// The ten published bounds on the eigenvalues of `T + A(H)` at n.
pub fn bounds_table(n: u32) -> Result<Vec<EigenBound>> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "eigenvalue bounds".into(),
            n,
        });
    }
    let nu = n as usize;
    let ni = i64::from(n);
    let t = nu * (nu + 1) / 2;
    let d = (nu + 2) * (nu + 2);
    let rows = [
        (1, 1, ni + 1, 2 * ni + 4),
        (2, nu + 1, ni + 1, ni + 2),
        (nu + 2, nu + 2, 1, ni + 1),
        (nu + 3, 2 * nu + 2, 1, 2),
        (2 * nu + 3, nu + 1 + t, 1, 1),
        (nu + 2 + t, nu + 2 + t, -1, 1),
        (nu + 3 + t, 2 * nu + 3 + t, -1, 0),
        (2 * nu + 4 + t, d - nu - 1, -1, -1),
        (d - nu, d - 1, -(ni + 1), -ni),
        (d, d, -(ni + 1), -(ni + 1)),
    ];
    Ok(rows
        .iter()
        .enumerate()
        .map(|(k, &(first, last, lower, upper))| EigenBound {
            item: k + 1,
            first,
            last,
            lower,
            upper,
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub bound: EigenBound,
    /// `alpha_i` for i in the bound's range.
    pub values: Vec<f64>,
    /// Weyl intervals for the same indices from sigma(A(H)) and sigma(T).
    pub weyl: Vec<(f64, f64)>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub reading: TReading,
    pub method: Method,
    pub alphas: Vec<f64>,
    pub items: Vec<BoundCheck>,
    /// Whether every item's ranges tile `1..=(n+2)^2` exactly once.
    pub partition_ok: bool,
}

impl BoundsReport {
    pub fn pass(&self) -> bool {
        self.partition_ok && self.items.iter().all(|c| c.pass)
    }
}

/// Checks the ten bounds against the eigenvalues of `T + A(H)` with T read
/// as ones at the `N_k` vertices.
pub fn verify_bounds(f: &FieldSpec) -> Result<BoundsReport> {
    verify_bounds_with(f, TReading::NkOnly)
}

pub fn verify_bounds_with(f: &FieldSpec, reading: TReading) -> Result<BoundsReport> {
    let n = f.n();
    let table = bounds_table(n)?;
    let alphas = numeric_spectrum(&t_plus_a(f, reading))?;
    let mu = numeric_spectrum(&build_h(f, LoopPolicy::LoopsAllowed).adjacency_matrix())?;
    let lam = numeric_spectrum(&t_matrix(f, reading))?;
    let d = alphas.len();
    let mut seen = vec![0u8; d + 1];
    let items = table
        .into_iter()
        .map(|b| {
            let values: Vec<f64> = b.indices().map(|i| alphas[i - 1]).collect();
            let weyl = b
                .indices()
                .map(|i| weyl_interval_f64(&mu, &lam, i))
                .collect::<Result<Vec<_>>>()?;
            for i in b.indices() {
                seen[i] += 1;
            }
            let pass = values
                .iter()
                .all(|&v| v >= b.lower as f64 - BOUND_SLACK && v <= b.upper as f64 + BOUND_SLACK);
            Ok(BoundCheck {
                bound: b,
                values,
                weyl,
                pass,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundsReport {
        n,
        reading,
        method: Method::Numeric,
        alphas,
        items,
        partition_ok: seen[1..].iter().all(|&c| c == 1),
    })
}

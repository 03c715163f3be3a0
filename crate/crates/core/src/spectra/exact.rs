use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::algebraic::exact_sqrt;
use super::{AlgebraicEigenvalue, SpectrumMultiset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    multiplicity_with, numeric_eigen, surd_pair_multiplicity_with, IntMatrix, Method, DEFAULT_SEED,
};

/// Numeric proximity used only to propose candidates; every accepted
/// candidate is confirmed by an exact nullity.
const PROPOSE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct ExactSpectrum {
    pub spectrum: SpectrumMultiset,
    /// `exact` unless some nullity came from modular ranks.
    pub method: Method,
    /// Largest relative residual of the numeric pass.
    pub numeric_residual: f64,
    /// Largest gap between the numeric and exact eigenvalues after sorting.
    pub numeric_gap: f64,
}

fn near_integer(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < PROPOSE_TOL).then_some(r as i64)
}

/// Exact spectrum of a symmetric integer matrix.
///
/// Numeric eigenvalues propose integer eigenvalues and conjugate quadratic
/// pairs; `hints` adds `(s, p)` pairs for `x^2 - s x + p`. Each proposal is
/// confirmed by an exact nullity, and the multiplicities must add up to the
/// dimension.
pub fn spectrum_exact_matrix(a: &IntMatrix, hints: &[(i64, i64)], seed: u64) -> Result<ExactSpectrum> {
    let dim = a.dim();
    let (eig, residual) = numeric_eigen(a)?;
    let mut method = Method::Exact;
    let mut entries = Vec::new();
    let mut found = 0usize;

    let mut ints: Vec<i64> = eig.values.iter().filter_map(|&x| near_integer(x)).collect();
    ints.sort_unstable();
    ints.dedup();
    for v in ints {
        let (m, how) = multiplicity_with(a, &BigRational::from_integer(v.into()), seed);
        method = method.combine(how);
        if m > 0 {
            entries.push((AlgebraicEigenvalue::integer(v), m));
            found += m;
        }
    }

    let mut others: Vec<f64> = eig
        .values
        .iter()
        .copied()
        .filter(|&x| near_integer(x).is_none())
        .collect();
    others.dedup_by(|x, y| (*x - *y).abs() < PROPOSE_TOL);
    let mut candidates: Vec<(i64, i64)> = hints.to_vec();
    for (i, &x) in others.iter().enumerate() {
        for &y in &others[i + 1..] {
            if let (Some(s), Some(p)) = (near_integer(x + y), near_integer(x * y)) {
                candidates.push((s, p));
            }
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    for (s, p) in candidates {
        if found >= dim {
            break;
        }
        let disc = BigInt::from(s) * s - BigInt::from(4) * p;
        if disc.is_negative() || exact_sqrt(&disc).is_some() {
            continue;
        }
        let (m, how) = surd_pair_multiplicity_with(a, &s.into(), &p.into(), seed)?;
        method = method.combine(how);
        if m > 0 {
            let [hi, lo] = AlgebraicEigenvalue::quadratic_roots(&s.into(), &p.into());
            entries.push((hi, m / 2));
            entries.push((lo, m / 2));
            found += m;
        }
    }

    if found != dim {
        return Err(Error::UnresolvedFactor {
            degree: dim.saturating_sub(found),
        });
    }
    let spectrum = SpectrumMultiset::new(entries);
    let gap = spectrum
        .to_f64_desc()
        .iter()
        .zip(&eig.values)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(ExactSpectrum {
        spectrum,
        method,
        numeric_residual: residual,
        numeric_gap: gap,
    })
}

/// [`spectrum_exact_matrix`] on a graph's adjacency matrix with the default seed.
pub fn spectrum_exact<L>(g: &Graph<L>) -> Result<ExactSpectrum> {
    spectrum_exact_matrix(&g.adjacency_matrix(), &[], DEFAULT_SEED)
}

/// Same with quadratic hints.
pub fn spectrum_exact_with_hints<L>(g: &Graph<L>, hints: &[(i64, i64)]) -> Result<ExactSpectrum> {
    spectrum_exact_matrix(&g.adjacency_matrix(), hints, DEFAULT_SEED)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, null};

    #[test]
    fn small_graphs() {
        let s = spectrum_exact(&null(7)).unwrap();
        assert_eq!(s.spectrum, SpectrumMultiset::from_integers([(0, 7)]));
        let s = spectrum_exact(&complete(4)).unwrap();
        assert_eq!(s.spectrum, SpectrumMultiset::from_integers([(3, 1), (-1, 3)]));
        // C5 has (-1 +- sqrt 5)/2 twice each
        let s = spectrum_exact(&cycle(5)).unwrap();
        assert_eq!(s.spectrum.total(), 5);
        assert_eq!(s.spectrum.entries().len(), 3);
        assert!(s.numeric_gap < 1e-9);
    }

    #[test]
    fn cubic_factor_is_reported() {
        // C7 eigenvalues 2cos(2 pi k / 7) have a cubic minimal polynomial
        assert_eq!(
            spectrum_exact(&cycle(7)).unwrap_err(),
            Error::UnresolvedFactor { degree: 6 }
        );
    }
}

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::AlgebraicEigenvalue;

/// Eigenvalues with multiplicities, strictly descending, multiplicities >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectrumMultiset {
    entries: Vec<(AlgebraicEigenvalue, usize)>,
}

#[derive(Serialize)]
struct Entry<'a> {
    value: &'a AlgebraicEigenvalue,
    approx: f64,
    multiplicity: usize,
}

impl Serialize for SpectrumMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|(v, m)| Entry {
            value: v,
            approx: v.to_f64(),
            multiplicity: *m,
        }))
    }
}

impl SpectrumMultiset {
    /// Sorts and merges; zero multiplicities are dropped.
    pub fn new(items: impl IntoIterator<Item = (AlgebraicEigenvalue, usize)>) -> Self {
        let mut v: Vec<_> = items.into_iter().filter(|(_, m)| *m > 0).collect();
        v.sort_by(|x, y| y.0.cmp(&x.0));
        let mut entries: Vec<(AlgebraicEigenvalue, usize)> = Vec::with_capacity(v.len());
        for (val, m) in v {
            match entries.last_mut() {
                Some((last, lm)) if *last == val => *lm += m,
                _ => entries.push((val, m)),
            }
        }
        Self { entries }
    }

    /// From integer eigenvalues with multiplicities.
    pub fn from_integers(items: impl IntoIterator<Item = (i64, usize)>) -> Self {
        Self::new(items.into_iter().map(|(v, m)| (AlgebraicEigenvalue::integer(v), m)))
    }

    pub fn entries(&self) -> &[(AlgebraicEigenvalue, usize)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, v: &AlgebraicEigenvalue) -> usize {
        self.entries
            .iter()
            .find(|(x, _)| x == v)
            .map_or(0, |(_, m)| *m)
    }

    /// Expanded, descending.
    pub fn values(&self) -> Vec<AlgebraicEigenvalue> {
        self.entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.clone(), *m))
            .collect()
    }

    pub fn to_f64_desc(&self) -> Vec<f64> {
        self.values().iter().map(AlgebraicEigenvalue::to_f64).collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().chain(&other.entries).cloned())
    }

    /// Exact eigenvalue sum; `None` if some surd lacks an equally frequent
    /// conjugate.
    pub fn trace(&self) -> Option<BigRational> {
        let mut sum = BigRational::zero();
        for (v, m) in &self.entries {
            match v {
                AlgebraicEigenvalue::Rational(r) => sum += r * BigRational::from_integer((*m).into()),
                AlgebraicEigenvalue::Surd { .. } => {
                    if self.multiplicity_of(&v.conjugate()) != *m {
                        return None;
                    }
                    let (s, _) = v.minimal_quadratic()?;
                    // each conjugate contributes half of s per copy
                    sum += s * BigRational::new((*m).into(), 2.into());
                }
            }
        }
        Some(sum)
    }

    /// Whether `lambda` and `-lambda` have equal multiplicity throughout.
    pub fn is_symmetric_about_zero(&self) -> bool {
        let neg = |v: &AlgebraicEigenvalue| match v {
            AlgebraicEigenvalue::Rational(r) => AlgebraicEigenvalue::Rational(-r),
            AlgebraicEigenvalue::Surd { a, b, d, c } => AlgebraicEigenvalue::Surd {
                a: -a,
                b: -b,
                d: d.clone(),
                c: c.clone(),
            },
        };
        self.entries.iter().all(|(v, m)| self.multiplicity_of(&neg(v)) == *m)
    }

    /// Entries of `self` whose multiplicity differs from `other`, as
    /// `(value, self multiplicity, other multiplicity)`.
    pub fn differences(&self, other: &Self) -> Vec<(AlgebraicEigenvalue, usize, usize)> {
        let mut keys: Vec<AlgebraicEigenvalue> = self
            .entries
            .iter()
            .chain(&other.entries)
            .map(|(v, _)| v.clone())
            .collect();
        keys.sort_by(|x, y| y.cmp(x));
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.multiplicity_of(&k), other.multiplicity_of(&k));
                (a != b).then_some((k, a, b))
            })
            .collect()
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            // surds are parenthesized so the exponent cannot bind to a divisor
            match v.as_integer() {
                Some(k) => write!(f, "{k}^{m}")?,
                None => write!(f, "({v})^{m}")?,
            }
        }
        f.write_str("}")
    }
}

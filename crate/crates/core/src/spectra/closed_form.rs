use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AlgebraicEigenvalue, SpectrumMultiset};
use crate::builder::Subgraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClosedFormGraph {
    H,
    Sub(Subgraph),
}

impl ClosedFormGraph {
    pub const ALL: [ClosedFormGraph; 5] = [
        Self::Sub(Subgraph::H1),
        Self::Sub(Subgraph::H2),
        Self::Sub(Subgraph::H3),
        Self::Sub(Subgraph::H4),
        Self::H,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::H => "H",
            Self::Sub(s) => s.name(),
        }
    }

    /// Smallest n for which the formula is stated.
    pub fn min_n(self) -> u32 {
        match self {
            Self::Sub(Subgraph::H4) => 3,
            _ => 2,
        }
    }

    pub fn order(self, n: usize) -> usize {
        match self {
            Self::H => (n + 2) * (n + 2),
            Self::Sub(s) => s.order(n),
        }
    }
}

impl From<Subgraph> for ClosedFormGraph {
    fn from(s: Subgraph) -> Self {
        Self::Sub(s)
    }
}

impl fmt::Display for ClosedFormGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which reading of a spectrum formula to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaVariant {
    /// The multiset as published.
    Printed,
    /// The multiset the exact computation produces for every tested n.
    Corrected,
}

fn quad(s: i64, p: i64, m: usize) -> impl Iterator<Item = (AlgebraicEigenvalue, usize)> {
    AlgebraicEigenvalue::quadratic_roots(&BigInt::from(s), &BigInt::from(p))
        .into_iter()
        .map(move |r| (r, m))
}

fn ints(items: &[(i64, usize)]) -> impl Iterator<Item = (AlgebraicEigenvalue, usize)> + '_ {
    items.iter().map(|&(v, m)| (AlgebraicEigenvalue::integer(v), m))
}

/// The published spectrum of `which` at `n`.
pub fn closed_form(which: ClosedFormGraph, n: u32) -> Result<SpectrumMultiset> {
    closed_form_variant(which, n, FormulaVariant::Printed)
}

pub fn closed_form_variant(which: ClosedFormGraph, n: u32, variant: FormulaVariant) -> Result<SpectrumMultiset> {
    if n < which.min_n() {
        return Err(Error::OutOfDomain {
            what: format!("spectrum formula for {which}"),
            n,
        });
    }
    let ni = i64::from(n);
    let nu = n as usize;
    use FormulaVariant::*;
    let s = match (which, variant) {
        (ClosedFormGraph::Sub(Subgraph::H1), Printed) => SpectrumMultiset::new(ints(&[
            (ni - 1, 1),
            (ni - 3, 1),
            (1, 2 * nu),
            (-1, 2 * nu),
            (-ni + 3, 1),
            (-ni + 1, 1),
        ])),
        (ClosedFormGraph::Sub(Subgraph::H1), Corrected) => SpectrumMultiset::new(ints(&[
            (ni + 1, 1),
            (ni - 1, 1),
            (1, 2 * nu - 2),
            (-1, 2 * nu - 2),
            (-(ni - 1), 1),
            (-(ni + 1), 1),
        ])),
        (ClosedFormGraph::Sub(Subgraph::H2), Printed) => SpectrumMultiset::new(
            ints(&[(ni, 1), (-ni, 1), (1, 2 * nu - 3), (-1, 2 * nu - 2)]).chain(quad(ni + 3, -(ni - 4), 1)),
        ),
        (ClosedFormGraph::Sub(Subgraph::H2), Corrected) => SpectrumMultiset::new(
            ints(&[(ni + 1, 1), (-(ni + 1), 2), (1, 2 * nu - 1), (-1, 2 * nu)]).chain(quad(ni + 4, -(ni - 3), 1)),
        ),
        (ClosedFormGraph::Sub(Subgraph::H3), Printed) => SpectrumMultiset::new(
            ints(&[(ni, 1), (-ni, 2), (3, nu - 2), (1, nu - 1), (-1, 3 * nu - 2)]).chain(quad(ni + 5, ni + 8, 1)),
        ),
        (ClosedFormGraph::Sub(Subgraph::H3), Corrected) => SpectrumMultiset::new(
            ints(&[(ni + 1, 1), (-(ni + 1), 2), (3, nu - 1), (1, nu), (-1, 3 * nu)]).chain(quad(ni + 6, ni + 9, 1)),
        ),
        (ClosedFormGraph::Sub(Subgraph::H4), _) => {
            let half = nu * (nu - 3) / 2;
            SpectrumMultiset::new(ints(&[
                (2 * ni - 3, 1),
                (ni - 3, nu - 1),
                (-(ni - 1), nu - 1),
                (-1, half),
                (1, half + 1),
            ]))
        }
        (ClosedFormGraph::H, _) => SpectrumMultiset::new(ints(&[
            (2 * ni + 3, 1),
            (ni + 1, nu + 1),
            (-(ni + 1), nu + 1),
            (1, nu * (nu + 1) / 2),
            (-1, (nu + 1) * (nu + 2) / 2),
        ])),
    };
    Ok(s)
}

/// Quadratic `(s, p)` pairs appearing in either reading, for use as
/// exact-spectrum hints.
pub fn quadratic_hints(which: ClosedFormGraph, n: u32) -> Vec<(i64, i64)> {
    let ni = i64::from(n);
    match which {
        ClosedFormGraph::Sub(Subgraph::H2) => vec![(ni + 3, -(ni - 4)), (ni + 4, -(ni - 3))],
        ClosedFormGraph::Sub(Subgraph::H3) => vec![(ni + 5, ni + 8), (ni + 6, ni + 9)],
        _ => Vec::new(),
    }
}

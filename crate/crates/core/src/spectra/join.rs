use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{char_poly, symmetric_eigen, CharPoly, IntMatrix};

/// One family graph of a generalized join, reduced to what the spectral
/// formulas need.
#[derive(Debug, Clone)]
pub struct JoinPart {
    pub regularity: usize,
    pub order: usize,
    /// Adjacency eigenvalues, descending.
    pub adjacency: Vec<f64>,
    /// Laplacian eigenvalues, descending.
    pub laplacian: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct JoinInput {
    /// Adjacency of K without loops.
    pub k: Vec<Vec<bool>>,
    pub parts: Vec<JoinPart>,
}

/// Sign in front of `sqrt(R) A(K) sqrt(R)` in the Laplacian quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LaplacianSign {
    /// `Q - sqrt(R) A sqrt(R)`; the Laplacian of the join in the quotient basis.
    Minus,
    /// `Q + sqrt(R) A sqrt(R)`; agrees with `Minus` only when K is bipartite.
    Plus,
}

fn dense_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    symmetric_eigen(a, n).expect("symmetric by construction").values
}

impl JoinInput {
    /// Requires `family.len() == |V(K)|` and every family graph regular.
    pub fn from_graphs<K, L>(k: &Graph<K>, family: &[Graph<L>]) -> Result<Self> {
        if family.len() != k.order() {
            return Err(Error::SizeMismatch {
                expected: k.order(),
                found: family.len(),
            });
        }
        let m = k.order();
        let k_adj = (0..m)
            .map(|i| (0..m).map(|j| i != j && k.has_edge(i, j)).collect())
            .collect();
        let parts = family
            .iter()
            .enumerate()
            .map(|(index, g)| {
                let r = g.regularity().ok_or(Error::NotRegular { index })?;
                let n = g.order();
                Ok(JoinPart {
                    regularity: r,
                    order: n,
                    adjacency: dense_eigenvalues(&g.adjacency_matrix().to_f64(), n),
                    laplacian: dense_eigenvalues(&g.laplacian_matrix().to_f64(), n),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { k: k_adj, parts })
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// `N_i`: total order of the parts adjacent to part i.
    pub fn neighbor_orders(&self) -> Vec<usize> {
        (0..self.size())
            .map(|i| {
                (0..self.size())
                    .filter(|&j| self.k[i][j])
                    .map(|j| self.parts[j].order)
                    .sum()
            })
            .collect()
    }

    /// `diag + s * sqrt(R) A(K) sqrt(R)` as a dense symmetric matrix.
    fn quotient(&self, diag: &[f64], s: f64) -> Vec<f64> {
        let m = self.size();
        let mut q = vec![0.0; m * m];
        for i in 0..m {
            q[i * m + i] = diag[i];
            for j in 0..m {
                if self.k[i][j] {
                    q[i * m + j] = s * ((self.parts[i].order * self.parts[j].order) as f64).sqrt();
                }
            }
        }
        q
    }

    /// `diag + s * A(K) R`, integer and similar to the symmetric quotient.
    fn quotient_int(&self, diag: &[usize], s: i64) -> IntMatrix {
        IntMatrix::from_fn(self.size(), |i, j| {
            let off = if self.k[i][j] { s * self.parts[j].order as i64 } else { 0 };
            BigInt::from(off + if i == j { diag[i] as i64 } else { 0 })
        })
    }
}

/// Drops the value nearest to `target` once.
fn remove_one(values: &[f64], target: f64) -> Vec<f64> {
    let mut v = values.to_vec();
    if let Some((pos, _)) = v
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - target).abs().total_cmp(&(b.1 - target).abs()))
    {
        v.remove(pos);
    }
    v
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Spectrum of a generalized join from its parts.
#[derive(Debug, Clone)]
pub struct JoinSpectrum {
    /// Whole spectrum, descending.
    pub values: Vec<f64>,
    /// Eigenvalues of the quotient matrix, descending.
    pub quotient_values: Vec<f64>,
    /// Exact characteristic polynomial of the quotient matrix.
    pub quotient_poly: CharPoly,
}

/// Adjacency spectrum: the part spectra without their regularity, plus the
/// spectrum of `P + sqrt(R) A(K) sqrt(R)`.
pub fn join_adjacency_spectrum(input: &JoinInput) -> Result<JoinSpectrum> {
    let m = input.size();
    let p: Vec<usize> = input.parts.iter().map(|g| g.regularity).collect();
    let pf: Vec<f64> = p.iter().map(|&r| r as f64).collect();
    let quotient_values = dense_eigenvalues(&input.quotient(&pf, 1.0), m);
    let mut values: Vec<f64> = input
        .parts
        .iter()
        .flat_map(|g| remove_one(&g.adjacency, g.regularity as f64))
        .collect();
    values.extend(&quotient_values);
    Ok(JoinSpectrum {
        values: sorted_desc(values),
        quotient_poly: char_poly(&input.quotient_int(&p, 1))?,
        quotient_values,
    })
}

/// Laplacian spectrum with the default sign.
pub fn join_laplacian_spectrum(input: &JoinInput) -> Result<JoinSpectrum> {
    join_laplacian_spectrum_with(input, LaplacianSign::Minus)
}

/// Laplacian spectrum: each part's nonzero Laplacian eigenvalues shifted by
/// `N_i`, plus the spectrum of `Q -+ sqrt(R) A(K) sqrt(R)`.
pub fn join_laplacian_spectrum_with(input: &JoinInput, sign: LaplacianSign) -> Result<JoinSpectrum> {
    let m = input.size();
    let nbr = input.neighbor_orders();
    let qf: Vec<f64> = nbr.iter().map(|&x| x as f64).collect();
    let s = match sign {
        LaplacianSign::Minus => -1,
        LaplacianSign::Plus => 1,
    };
    let quotient_values = dense_eigenvalues(&input.quotient(&qf, s as f64), m);
    let mut values: Vec<f64> = input
        .parts
        .iter()
        .zip(&nbr)
        .flat_map(|(g, &ni)| {
            remove_one(&g.laplacian, 0.0)
                .into_iter()
                .map(move |x| x + ni as f64)
        })
        .collect();
    values.extend(&quotient_values);
    Ok(JoinSpectrum {
        values: sorted_desc(values),
        quotient_poly: char_poly(&input.quotient_int(&nbr, s))?,
        quotient_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, null, Graph, LoopPolicy};

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-8)
    }

    #[test]
    fn complete_bipartite() {
        let input = JoinInput::from_graphs(&complete(2), &[null(2), null(2)]).unwrap();
        let s = join_adjacency_spectrum(&input).unwrap();
        assert!(close(&s.values, &[2.0, 0.0, 0.0, -2.0]));
        let l = join_laplacian_spectrum(&JoinInput::from_graphs(&complete(2), &[null(1), null(1)]).unwrap()).unwrap();
        assert!(close(&l.values, &[2.0, 0.0]));
    }

    #[test]
    fn identity_join() {
        let k1 = Graph::empty(vec![()], LoopPolicy::Simple);
        let s = join_adjacency_spectrum(&JoinInput::from_graphs(&k1, &[complete(3)]).unwrap()).unwrap();
        assert!(close(&s.values, &[2.0, -1.0, -1.0]));
        let l = join_laplacian_spectrum(&JoinInput::from_graphs(&k1, &[null(3)]).unwrap()).unwrap();
        assert!(close(&l.values, &[0.0, 0.0, 0.0]));
    }

    #[test]
    fn irregular_part_is_rejected() {
        let mut path = null(3);
        path.set_edge(0, 1, true);
        let k1 = Graph::empty(vec![()], LoopPolicy::Simple);
        assert_eq!(
            JoinInput::from_graphs(&k1, &[path]).unwrap_err(),
            Error::NotRegular { index: 0 }
        );
    }
}

//! Construction of Γ(M2(F)), the representative graph H, its subgraphs
//! H1..H4 and the per-class graphs.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{CanonicalForm, ZClass};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{Graph, LoopPolicy};
use crate::ring::{zero_divisors, Mat2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexSetId {
    S0,
    /// `S_j`, 1-based over the nonzero elements in enumeration order.
    S(usize),
    /// `T_j`, 1-based like `S_j`.
    T(usize),
}

impl fmt::Display for VertexSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::S0 => write!(f, "S_0"),
            Self::S(j) => write!(f, "S_{j}"),
            Self::T(j) => write!(f, "T_{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSetSpec {
    pub id: VertexSetId,
    pub members: Vec<CanonicalForm>,
}

/// `S_0`, then `S_1..S_n`, then `T_1..T_n`; together every class
/// representative appears exactly once.
///
/// `S_j = (E_{-1/a}, E^{-a}, F^{a}, F_{1/a}, N_{-a})` for `a = a_j`, and `T_j`
/// lists `E_{a_j/(a_j - a_i), a_j}` over the other nonzero `a_i` in order.
pub fn vertex_sets(f: &FieldSpec) -> Vec<VertexSetSpec> {
    use CanonicalForm::*;
    let inv = |a| f.inv(a).expect("nonzero");
    let nonzero: Vec<_> = f.nonzero().collect();
    let mut sets = vec![VertexSetSpec {
        id: VertexSetId::S0,
        members: vec![M, N, E0, ETop0],
    }];
    for (j, &a) in nonzero.iter().enumerate() {
        sets.push(VertexSetSpec {
            id: VertexSetId::S(j + 1),
            members: vec![
                ESub(f.neg(inv(a))),
                ESup(f.neg(a)),
                FSup(a),
                FSub(inv(a)),
                Nk(f.neg(a)),
            ],
        });
    }
    for (j, &aj) in nonzero.iter().enumerate() {
        let members = nonzero
            .iter()
            .filter(|&&ai| ai != aj)
            .map(|&ai| EPair {
                i: f.div(aj, f.sub(aj, ai)).expect("distinct"),
                j: aj,
            })
            .collect();
        sets.push(VertexSetSpec {
            id: VertexSetId::T(j + 1),
            members,
        });
    }
    sets
}

/// Vertex order of H: the concatenated members of [`vertex_sets`].
pub fn h_vertices(f: &FieldSpec) -> Vec<CanonicalForm> {
    vertex_sets(f).into_iter().flat_map(|s| s.members).collect()
}

fn annihilation_graph<L: Sync>(labels: Vec<L>, mats: &[Mat2], f: &FieldSpec, policy: LoopPolicy) -> Graph<L> {
    let n = mats.len();
    let rows: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| (i != j || policy == LoopPolicy::LoopsAllowed) && mats[i].annihilates(&mats[j], f))
                .collect()
        })
        .collect();
    Graph::from_rows(labels, policy, rows.concat())
}

/// Γ(M2(F)) on the zero-divisors in lexicographic order.
pub fn build_gamma(f: &FieldSpec) -> Result<Graph<Mat2>> {
    let zds = zero_divisors(f)?;
    Ok(annihilation_graph(zds.clone(), &zds, f, LoopPolicy::Simple))
}

/// H on the class representatives in [`h_vertices`] order. Under
/// [`LoopPolicy::LoopsAllowed`] each nilpotent carries a loop.
pub fn build_h(f: &FieldSpec, policy: LoopPolicy) -> Graph<CanonicalForm> {
    let forms = h_vertices(f);
    let mats: Vec<Mat2> = forms
        .iter()
        .map(|c| c.materialize(f).expect("valid template"))
        .collect();
    annihilation_graph(forms, &mats, f, policy)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subgraph {
    H1,
    H2,
    H3,
    H4,
}

impl Subgraph {
    pub const ALL: [Subgraph; 4] = [Self::H1, Self::H2, Self::H3, Self::H4];

    pub fn name(self) -> &'static str {
        match self {
            Self::H1 => "H1",
            Self::H2 => "H2",
            Self::H3 => "H3",
            Self::H4 => "H4",
        }
    }

    /// Vertex count as a function of n.
    pub fn order(self, n: usize) -> usize {
        match self {
            Self::H1 => 4 * n,
            Self::H2 => 4 * n + 4,
            Self::H3 => 5 * n + 4,
            Self::H4 => n * (n - 1),
        }
    }
}

impl fmt::Display for Subgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Positions of the subgraph's vertices inside [`h_vertices`].
pub fn subgraph_indices(f: &FieldSpec, which: Subgraph) -> Vec<usize> {
    let n = f.n() as usize;
    let s_block = |j: usize| 4 + 5 * j;
    let idx: Vec<usize> = match which {
        Subgraph::H1 => (0..n).flat_map(|j| s_block(j)..s_block(j) + 4).collect(),
        Subgraph::H2 => (0..4).chain((0..n).flat_map(|j| s_block(j)..s_block(j) + 4)).collect(),
        Subgraph::H3 => (0..4 + 5 * n).collect(),
        Subgraph::H4 => (4 + 5 * n..(n + 2) * (n + 2)).collect(),
    };
    idx
}

/// Induced subgraph of the looped H; H2 and H3 keep the loops at their
/// nilpotent vertices.
pub fn build_subgraph(f: &FieldSpec, which: Subgraph) -> Result<Graph<CanonicalForm>> {
    let idx = subgraph_indices(f, which);
    if idx.is_empty() {
        return Err(Error::EmptySubgraph(which.name()));
    }
    Ok(build_h(f, LoopPolicy::LoopsAllowed).induced(&idx))
}

/// The graph a class induces in Γ: complete for nilpotent classes, null otherwise.
pub fn class_induced_graph(cls: &ZClass) -> Graph<Mat2> {
    let complete = cls.representative.is_nilpotent();
    Graph::from_fn(cls.members.clone(), LoopPolicy::Simple, |_, _| complete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::all_classes;
    use crate::graph::generalized_join;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    #[test]
    fn vertex_set_sizes() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            let n = f.n() as usize;
            let sets = vertex_sets(&f);
            assert_eq!(sets.len(), 1 + 2 * n);
            assert_eq!(sets[0].members.len(), 4);
            assert!(sets[1..=n].iter().all(|s| s.members.len() == 5));
            let t: usize = sets[n + 1..].iter().map(|s| s.members.len()).sum();
            assert_eq!(t, n * (n - 1));
            let mut all = h_vertices(&f);
            assert_eq!(all.len(), (n + 2) * (n + 2));
            all.sort();
            all.dedup();
            assert_eq!(all.len(), (n + 2) * (n + 2), "sets overlap for q={q}");
        }
    }

    #[test]
    fn h_regular_with_loops() {
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            let n = f.n() as usize;
            let h = build_h(&f, LoopPolicy::LoopsAllowed);
            assert_eq!(h.regularity(), Some(2 * n + 3));
            assert_eq!(h.loop_count(), n + 2);
        }
    }

    #[test]
    fn simple_h_drops_nilpotent_degree() {
        let f = gf(3);
        let h = build_h(&f, LoopPolicy::Simple);
        for (i, form) in h.labels().iter().enumerate() {
            let expected = if form.is_nilpotent() { 6 } else { 7 };
            assert_eq!(h.degree(i), expected);
        }
    }

    #[test]
    fn subgraph_orders() {
        let f = gf(3);
        for (which, order) in [(Subgraph::H1, 8), (Subgraph::H2, 12), (Subgraph::H3, 14), (Subgraph::H4, 2)] {
            assert_eq!(build_subgraph(&f, which).unwrap().order(), order);
        }
        assert_eq!(build_subgraph(&gf(2), Subgraph::H4), Err(Error::EmptySubgraph("H4")));
        assert_eq!(build_subgraph(&gf(5), Subgraph::H4).unwrap().regularity(), Some(5));
        assert!(build_subgraph(&gf(4), Subgraph::H1).unwrap().is_bipartite());
    }

    #[test]
    fn class_graphs() {
        let f = gf(5);
        let classes = all_classes(&f).unwrap();
        let e0 = classes.iter().find(|c| c.representative == CanonicalForm::E0).unwrap();
        assert_eq!(class_induced_graph(e0).edge_count(), 0);
        let nil = classes.iter().find(|c| c.representative == CanonicalForm::N).unwrap();
        assert_eq!(class_induced_graph(nil).edge_count(), 6);
    }

    #[test]
    fn join_rebuilds_gamma() {
        for q in [2, 3, 4] {
            let f = gf(q);
            let classes = all_classes(&f).unwrap();
            let family: Vec<_> = classes.iter().map(class_induced_graph).collect();
            let joined = generalized_join(&build_h(&f, LoopPolicy::Simple), &family).unwrap();
            let gamma = build_gamma(&f).unwrap();
            let pos: std::collections::HashMap<Mat2, usize> =
                gamma.labels().iter().enumerate().map(|(i, m)| (*m, i)).collect();
            let order: Vec<usize> = joined.labels().iter().map(|m| pos[m]).collect();
            assert!(gamma.induced(&order).same_adjacency(&joined), "q={q}");
        }
    }
}

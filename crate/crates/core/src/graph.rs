//! Labeled graphs with dense symmetric adjacency and an explicit loop policy.

use std::collections::VecDeque;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LoopPolicy {
    Simple,
    LoopsAllowed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph<L> {
    labels: Vec<L>,
    adj: Vec<bool>,
    policy: LoopPolicy,
}

impl<L> Graph<L> {
    /// Edgeless graph on the given labels.
    pub fn empty(labels: Vec<L>, policy: LoopPolicy) -> Self {
        let n = labels.len();
        Self {
            labels,
            adj: vec![false; n * n],
            policy,
        }
    }

    /// Builds a graph from a symmetric predicate. The predicate is only
    /// queried for `i <= j`; the diagonal is skipped under [`LoopPolicy::Simple`].
    pub fn from_fn(labels: Vec<L>, policy: LoopPolicy, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(labels, policy);
        let n = g.order();
        for i in 0..n {
            let start = if policy == LoopPolicy::Simple { i + 1 } else { i };
            for j in start..n {
                if edge(i, j) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Builds a graph from precomputed symmetric rows.
    pub(crate) fn from_rows(labels: Vec<L>, policy: LoopPolicy, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), labels.len() * labels.len());
        Self { labels, adj, policy }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn policy(&self) -> LoopPolicy {
        self.policy
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.order() + j]
    }

    /// Sets or clears an edge. Loops are ignored under the simple policy.
    pub fn set_edge(&mut self, i: usize, j: usize, present: bool) {
        if i == j && self.policy == LoopPolicy::Simple {
            return;
        }
        let n = self.order();
        self.adj[i * n + j] = present;
        self.adj[j * n + i] = present;
    }

    /// Row sum of the adjacency matrix; a loop counts once.
    pub fn degree(&self, i: usize) -> usize {
        let n = self.order();
        self.adj[i * n..(i + 1) * n].iter().filter(|&&b| b).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|i| self.degree(i)).collect()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.order();
        (0..n).filter(move |&j| self.adj[i * n + j])
    }

    /// Edges `(i, j)` with `i <= j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |i| (i..n).filter(move |&j| self.has_edge(i, j)).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn loop_count(&self) -> usize {
        (0..self.order()).filter(|&i| self.has_edge(i, i)).count()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&first) => d.iter().all(|&x| x == first).then_some(first),
        }
    }

    /// Two-colorable; a loop makes a graph non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.order();
        IntMatrix::from_fn(n, |i, j| BigInt::from(self.has_edge(i, j) as u8))
    }

    /// `D - A` for loop-free graphs.
    pub fn laplacian_matrix(&self) -> IntMatrix {
        let n = self.order();
        let deg = self.degrees();
        IntMatrix::from_fn(n, |i, j| {
            let a = BigInt::from(self.has_edge(i, j) as u8);
            if i == j {
                BigInt::from(deg[i]) - a
            } else {
                -a
            }
        })
    }

    /// Copy with the diagonal cleared.
    pub fn without_loops(&self) -> Self
    where
        L: Clone,
    {
        let mut g = Self {
            labels: self.labels.clone(),
            adj: self.adj.clone(),
            policy: LoopPolicy::Simple,
        };
        let n = g.order();
        for i in 0..n {
            g.adj[i * n + i] = false;
        }
        g
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self
    where
        L: Clone,
    {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Self::from_fn(labels, self.policy, |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    pub fn map_labels<M>(self, f: impl FnMut(L) -> M) -> Graph<M> {
        Graph {
            labels: self.labels.into_iter().map(f).collect(),
            adj: self.adj,
            policy: self.policy,
        }
    }

    /// Adjacency equality, labels ignored.
    pub fn same_adjacency<M>(&self, other: &Graph<M>) -> bool {
        self.adj == other.adj
    }
}

/// Complete graph K_m.
pub fn complete(m: usize) -> Graph<usize> {
    Graph::from_fn((0..m).collect(), LoopPolicy::Simple, |_, _| true)
}

/// Null graph on m vertices.
pub fn null(m: usize) -> Graph<usize> {
    Graph::empty((0..m).collect(), LoopPolicy::Simple)
}

/// Cycle C_m, m >= 3.
pub fn cycle(m: usize) -> Graph<usize> {
    Graph::from_fn((0..m).collect(), LoopPolicy::Simple, |i, j| j == i + 1 || (i == 0 && j == m - 1))
}

/// The K-generalized join: the disjoint union of `family` with every vertex of
/// `family[i]` joined to every vertex of `family[j]` whenever `ij` is an edge
/// of `k` (loops of `k` are ignored). Vertices are concatenated in family order.
pub fn generalized_join<K, L: Clone>(k: &Graph<K>, family: &[Graph<L>]) -> Result<Graph<L>> {
    if family.len() != k.order() {
        return Err(Error::SizeMismatch {
            expected: k.order(),
            found: family.len(),
        });
    }
    let offsets: Vec<usize> = family
        .iter()
        .scan(0, |acc, g| {
            let start = *acc;
            *acc += g.order();
            Some(start)
        })
        .collect();
    let policy = if family.iter().all(|g| g.policy == LoopPolicy::Simple) {
        LoopPolicy::Simple
    } else {
        LoopPolicy::LoopsAllowed
    };
    let labels = family.iter().flat_map(|g| g.labels.iter().cloned()).collect();
    let mut out = Graph::empty(labels, policy);
    for (gi, g) in family.iter().enumerate() {
        let off = offsets[gi];
        for (u, v) in g.edges() {
            out.set_edge(off + u, off + v, true);
        }
    }
    for i in 0..k.order() {
        for j in i + 1..k.order() {
            if !k.has_edge(i, j) {
                continue;
            }
            for u in 0..family[i].order() {
                for v in 0..family[j].order() {
                    out.set_edge(offsets[i] + u, offsets[j] + v, true);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_identity_case() {
        let k = Graph::empty(vec![()], LoopPolicy::Simple);
        let g = cycle(5);
        let j = generalized_join(&k, std::slice::from_ref(&g)).unwrap();
        assert!(j.same_adjacency(&g));
    }

    #[test]
    fn join_of_two_empty_graphs_is_k22() {
        let k = complete(2);
        let j = generalized_join(&k, &[null(2), null(2)]).unwrap();
        assert_eq!(j.edge_count(), 4);
        assert_eq!(j.regularity(), Some(2));
        assert!(j.is_bipartite());
    }

    #[test]
    fn join_size_mismatch() {
        let k = complete(3);
        assert_eq!(
            generalized_join(&k, &[null(1)]),
            Err(Error::SizeMismatch { expected: 3, found: 1 })
        );
    }

    #[test]
    fn loops_respect_policy() {
        let mut g = Graph::empty(vec![0, 1], LoopPolicy::Simple);
        g.set_edge(0, 0, true);
        assert_eq!(g.loop_count(), 0);
        let mut h = Graph::empty(vec![0, 1], LoopPolicy::LoopsAllowed);
        h.set_edge(0, 0, true);
        h.set_edge(0, 1, true);
        assert_eq!(h.degree(0), 2);
        assert!(!h.is_bipartite());
        assert_eq!(h.without_loops().degree(0), 1);
    }

    #[test]
    fn small_families() {
        assert_eq!(complete(4).regularity(), Some(3));
        assert_eq!(null(3).edge_count(), 0);
        assert_eq!(cycle(4).regularity(), Some(2));
        assert!(!cycle(5).is_bipartite());
        assert_eq!(complete(3).laplacian_matrix().trace(), BigInt::from(6));
    }
}

//! Block adjacency templates for H1..H4, assembled from small fixed blocks
//! and independent of any field arithmetic.

use crate::builder::Subgraph;
use crate::graph::{Graph, LoopPolicy};

type Block = Vec<Vec<u8>>;

fn block<const R: usize, const C: usize>(rows: [[u8; C]; R]) -> Block {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn transpose(b: &Block) -> Block {
    let cols = b.first().map_or(0, Vec::len);
    (0..cols).map(|j| b.iter().map(|r| r[j]).collect()).collect()
}

/// S_0 block, loops at M and N.
pub fn block_a() -> Block {
    block([[1, 0, 1, 1], [0, 1, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])
}

/// S_0 against the idempotent part of S_j.
pub fn block_b() -> Block {
    block([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
}

/// Between idempotent parts of S_j and S_k, j != k.
pub fn block_c() -> Block {
    block([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
}

/// Idempotent part of S_j against itself.
pub fn block_d() -> Block {
    block([[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]])
}

/// S_0 against the whole S_j.
pub fn block_l() -> Block {
    block([[1, 0, 0, 1, 0], [0, 1, 1, 0, 0], [0, 1, 0, 1, 0], [1, 0, 1, 0, 0]])
}

/// S_j against itself, loop at N_{-a_j}.
pub fn block_m() -> Block {
    block([
        [0, 0, 1, 1, 1],
        [0, 0, 1, 1, 1],
        [1, 1, 0, 0, 1],
        [1, 1, 0, 0, 1],
        [1, 1, 1, 1, 1],
    ])
}

/// S_j against S_k, j != k: C padded by a zero row and column.
pub fn block_n() -> Block {
    let mut b: Block = block_c().into_iter().map(|mut r| {
        r.push(0);
        r
    }).collect();
    b.push(vec![0; 5]);
    b
}

/// `V_{rs}` of size `m x m`: ones on row r and column s (1-based).
pub fn block_v(m: usize, r: usize, s: usize) -> Block {
    (1..=m)
        .map(|i| (1..=m).map(|j| u8::from(i == r || j == s)).collect())
        .collect()
}

/// Assembles a symmetric block matrix from a block-row/column function.
fn assemble(sizes: &[usize], mut at: impl FnMut(usize, usize) -> Block) -> Vec<Vec<u8>> {
    let total: usize = sizes.iter().sum();
    let mut out = vec![vec![0u8; total]; total];
    let mut r0 = 0;
    for (bi, &rs) in sizes.iter().enumerate() {
        let mut c0 = 0;
        for (bj, &cs) in sizes.iter().enumerate() {
            let b = at(bi, bj);
            debug_assert_eq!((b.len(), b.first().map_or(cs, Vec::len)), (rs, cs));
            for (i, row) in b.iter().enumerate() {
                out[r0 + i][c0..c0 + cs].copy_from_slice(row);
            }
            c0 += cs;
        }
        r0 += rs;
    }
    out
}

/// Template adjacency of `which` for the given n, in the vertex order used
/// by [`crate::builder::build_subgraph`].
pub fn template_matrix(which: Subgraph, n: usize) -> Vec<Vec<u8>> {
    match which {
        Subgraph::H1 => assemble(&vec![4; n], |i, j| if i == j { block_d() } else { block_c() }),
        Subgraph::H2 => {
            let sizes: Vec<usize> = std::iter::repeat_n(4, n + 1).collect();
            assemble(&sizes, |i, j| match (i, j) {
                (0, 0) => block_a(),
                (0, _) => block_b(),
                (_, 0) => transpose(&block_b()),
                _ if i == j => block_d(),
                _ => block_c(),
            })
        }
        Subgraph::H3 => {
            let sizes: Vec<usize> = std::iter::once(4).chain(std::iter::repeat_n(5, n)).collect();
            assemble(&sizes, |i, j| match (i, j) {
                (0, 0) => block_a(),
                (0, _) => block_l(),
                (_, 0) => transpose(&block_l()),
                _ if i == j => block_m(),
                _ => block_n(),
            })
        }
        Subgraph::H4 => {
            // L + L^t with block (r, c) = V_{c-1, r} above the diagonal
            let m = n.saturating_sub(1);
            assemble(&vec![m; n], |r, c| {
                if r < c {
                    block_v(m, c, r + 1)
                } else if r > c {
                    transpose(&block_v(m, r, c + 1))
                } else {
                    vec![vec![0; m]; m]
                }
            })
        }
    }
}

/// [`template_matrix`] as a graph with indices as labels.
pub fn template_graph(which: Subgraph, n: usize) -> Graph<usize> {
    let a = template_matrix(which, n);
    Graph::from_fn((0..a.len()).collect(), LoopPolicy::LoopsAllowed, |i, j| a[i][j] == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates_are_symmetric() {
        for which in Subgraph::ALL {
            for n in 2..6 {
                let a = template_matrix(which, n);
                assert_eq!(a.len(), which.order(n));
                for i in 0..a.len() {
                    for j in 0..a.len() {
                        assert_eq!(a[i][j], a[j][i], "{which} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn v_block_shape() {
        let v = block_v(3, 2, 1);
        assert_eq!(v, vec![vec![1, 0, 0], vec![1, 1, 1], vec![1, 0, 0]]);
    }
}

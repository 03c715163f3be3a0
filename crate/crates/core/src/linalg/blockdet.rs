use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{determinant, IntMatrix};

/// Determinant of the `n x n` block matrix with `c` on the diagonal and `b`
/// everywhere else: `det(C + (n-1)B) * det(C - B)^(n-1)`.
pub fn block_structured_det(c: &IntMatrix, b: &IntMatrix, n: usize) -> BigInt {
    assert_eq!(c.dim(), b.dim());
    if n == 0 {
        return BigInt::one();
    }
    let head = determinant(&c.add(&b.scale(&BigInt::from(n - 1))));
    if n == 1 {
        return head;
    }
    let tail = determinant(&c.sub(b));
    if tail.is_zero() {
        return BigInt::zero();
    }
    head * num_traits::pow(tail, n - 1)
}

/// The assembled `nk x nk` block matrix.
pub fn assemble_block_matrix(c: &IntMatrix, b: &IntMatrix, n: usize) -> IntMatrix {
    let rows: Vec<Vec<&IntMatrix>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { c } else { b }).collect())
        .collect();
    IntMatrix::from_blocks(&rows)
}

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;

/// Fraction-free elimination; returns the rank and, for full rank, the
/// determinant (zero otherwise).
fn eliminate(a: &IntMatrix) -> (usize, BigInt) {
    let n = a.dim();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut rank = 0;
    let mut col = 0;
    while rank < n && col < n {
        let Some(p) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..n {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    let det = if rank == n {
        if sign < 0 {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Exact determinant by Bareiss elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    if a.dim() == 0 {
        return BigInt::one();
    }
    eliminate(a).1
}

/// Exact rank over the rationals.
pub fn rank(a: &IntMatrix) -> usize {
    eliminate(a).0
}

/// `dim - rank`.
pub fn nullity(a: &IntMatrix) -> usize {
    a.dim() - rank(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let a = IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]).unwrap();
        assert_eq!(determinant(&a), BigInt::from(18));
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&swap), BigInt::from(-1));
        let ones = IntMatrix::from_fn(4, |_, _| BigInt::one());
        assert_eq!(rank(&ones), 1);
        assert_eq!(determinant(&ones), BigInt::zero());
        assert_eq!(rank(&IntMatrix::identity(5)), 5);
    }

    #[test]
    fn rank_with_zero_columns() {
        let a = IntMatrix::from_rows(&[vec![0, 1, 2], vec![0, 2, 4], vec![0, 0, 1]]).unwrap();
        assert_eq!(rank(&a), 2);
        assert_eq!(nullity(&a), 1);
    }
}

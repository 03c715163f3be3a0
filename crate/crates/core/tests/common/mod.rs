//! Oracles shared by the integration tests. Nothing here calls into the
//! library's linear algebra or classification code.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use zerodiv::{FieldSpec, IntMatrix, Mat2};

pub fn gf(q: u32) -> FieldSpec {
    FieldSpec::with_order(q).unwrap_or_else(|e| panic!("GF({q}): {e}"))
}

pub fn to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
}

/// Row echelon form over the rationals; returns (rank, determinant).
fn eliminate(rows: &[Vec<BigInt>]) -> (usize, BigRational) {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut det = BigRational::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else {
            det = BigRational::zero();
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            det = -det;
        }
        let pivot = a[rank][c].clone();
        det *= &pivot;
        for r in rank + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let factor = &a[r][c] / &pivot;
            for k in c..cols {
                let delta = &factor * &a[rank][k];
                a[r][k] -= delta;
            }
        }
        rank += 1;
    }
    if rank < n {
        det = BigRational::zero();
    }
    (rank, det)
}

pub fn rational_det(rows: &[Vec<BigInt>]) -> BigInt {
    let d = eliminate(rows).1;
    assert!(d.is_integer());
    d.to_integer()
}

pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    eliminate(rows).0
}

/// Multiplicity of the integer eigenvalue `lambda` of a symmetric matrix.
pub fn eigen_multiplicity(m: &IntMatrix, lambda: i64) -> usize {
    let mut rows = to_rows(m);
    for (i, r) in rows.iter_mut().enumerate() {
        r[i] -= lambda;
    }
    m.dim() - rational_rank(&rows)
}

/// det(xI - A) at an integer point.
pub fn char_poly_at(m: &IntMatrix, x: i64) -> BigInt {
    let mut rows: Vec<Vec<BigInt>> = to_rows(m).into_iter().map(|r| r.into_iter().map(|v| -v).collect()).collect();
    for (i, r) in rows.iter_mut().enumerate() {
        r[i] += x;
    }
    rational_det(&rows)
}

/// Eigenvalues of a symmetric matrix, descending.
pub fn eigenvalues_desc(rows: &[Vec<f64>]) -> Vec<f64> {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let mut v: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn int_eigenvalues_desc(m: &IntMatrix) -> Vec<f64> {
    let rows: Vec<Vec<f64>> = to_rows(m)
        .iter()
        .map(|r| r.iter().map(|x| x.to_string().parse().unwrap()).collect())
        .collect();
    eigenvalues_desc(&rows)
}

pub fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Integer polynomial, little-endian, for expanding products of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn from_i64(c: &[i64]) -> Self {
        Self(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self(out)
    }

    pub fn product(factors: &[(&[i64], usize)]) -> Self {
        let mut acc = Self::from_i64(&[1]);
        for &(f, k) in factors {
            for _ in 0..k {
                acc = acc.mul(&Self::from_i64(f));
            }
        }
        acc
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

/// Every matrix with nonzero determinant, by brute force.
pub fn general_linear(f: &FieldSpec) -> Vec<Mat2> {
    let els: Vec<_> = f.elements().collect();
    let mut out = Vec::new();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    if f.sub(f.mul(a, d), f.mul(b, c)) != f.zero() {
                        out.push(Mat2 { a, b, c, d });
                    }
                }
            }
        }
    }
    out
}

/// Singular nonzero matrices, by brute force.
pub fn zero_divisors_brute(f: &FieldSpec) -> Vec<Mat2> {
    let els: Vec<_> = f.elements().collect();
    let mut out = Vec::new();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    let m = Mat2 { a, b, c, d };
                    if !m.is_zero() && f.sub(f.mul(a, d), f.mul(b, c)) == f.zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// `a = U b = b V` for some U, V in GL2, searched exhaustively.
pub fn related_brute(a: &Mat2, b: &Mat2, f: &FieldSpec, gl: &[Mat2]) -> bool {
    gl.iter().any(|u| u.mul(b, f) == *a) && gl.iter().any(|v| b.mul(v, f) == *a)
}

pub fn abs_max(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}


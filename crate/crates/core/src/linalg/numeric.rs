use super::IntMatrix;
use crate::error::{Error, Result};

const OFF_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a real symmetric matrix, values descending.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`, unit length.
    pub vectors: Vec<Vec<f64>>,
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Cyclic Jacobi on a row-major `n x n` symmetric matrix.
pub fn symmetric_eigen(a: &[f64], n: usize) -> Result<SymmetricEigen> {
    assert_eq!(a.len(), n * n);
    let scale = frobenius(a).max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (a[i * n + j] - a[j * n + i]).abs() > 1e-12 * scale {
                return Err(Error::NonSymmetric);
            }
        }
    }
    let mut m = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i * n + j] * m[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= OFF_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| m[y * n + y].total_cmp(&m[x * n + x]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&k| m[k * n + k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i * n + k]).collect())
            .collect(),
    })
}

impl SymmetricEigen {
    /// Largest `||A v - lambda v||` over the pairs.
    pub fn max_residual(&self, a: &[f64]) -> f64 {
        let n = self.values.len();
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&lam, vec)| {
                (0..n)
                    .map(|i| {
                        let av: f64 = (0..n).map(|j| a[i * n + j] * vec[j]).sum();
                        (av - lam * vec[i]).powi(2)
                    })
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

/// Eigenvalues of a symmetric integer matrix, descending.
pub fn numeric_spectrum(a: &IntMatrix) -> Result<Vec<f64>> {
    Ok(numeric_eigen(a)?.0.values)
}

/// Eigenpairs plus the residual relative to `||A||_F`.
pub fn numeric_eigen(a: &IntMatrix) -> Result<(SymmetricEigen, f64)> {
    if !a.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let dense = a.to_f64();
    let eig = symmetric_eigen(&dense, a.dim())?;
    let rel = eig.max_residual(&dense) / frobenius(&dense).max(1.0);
    Ok((eig, rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn complete_graph() {
        let k4 = IntMatrix::from_fn(4, |i, j| BigInt::from(u8::from(i != j)));
        let (eig, res) = numeric_eigen(&k4).unwrap();
        let want = [3.0, -1.0, -1.0, -1.0];
        for (x, w) in eig.values.iter().zip(want) {
            assert!((x - w).abs() < 1e-10);
        }
        assert!(res < 1e-8);
    }

    #[test]
    fn null_graph_and_asymmetric() {
        assert_eq!(numeric_spectrum(&IntMatrix::zeros(5)).unwrap(), vec![0.0; 5]);
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(numeric_spectrum(&a), Err(Error::NonSymmetric));
    }
}

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::IntMatrix;

/// Primes drawn per rank computation.
pub const PRIME_COUNT: usize = 5;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// `count` distinct random primes in `[2^29, 2^30)`.
pub fn random_primes(count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.gen_range(1u64 << 29..1u64 << 30) | 1;
        if is_prime_u64(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = r.to_i64().expect("reduced");
    r.rem_euclid(p as i64) as u64
}

/// Rank of `a` over GF(p).
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let n = a.dim();
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|i| a.row(i).iter().map(|x| reduce(x, p)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(piv, rank);
        let inv = pow_mod(m[rank][col], p - 2, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = mul_mod(row[col], inv, p);
            if f == 0 {
                continue;
            }
            for j in col..n {
                row[j] = (row[j] + p - mul_mod(f, prow[j], p)) % p;
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Maximum rank modulo [`PRIME_COUNT`] random 30-bit primes. Never exceeds
/// the rational rank; equals it unless every prime divides a nonzero minor.
pub fn rank_modular(a: &IntMatrix, seed: u64) -> usize {
    random_primes(PRIME_COUNT, seed)
        .par_iter()
        .map(|&p| rank_mod_p(a, p))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn primes_are_prime() {
        for p in random_primes(5, 7) {
            assert!(is_prime_u64(p));
            assert!((1 << 29..1 << 30).contains(&p));
        }
        assert!(!is_prime_u64(561));
        assert!(is_prime_u64(1_000_000_007));
    }

    #[test]
    fn modular_ranks() {
        assert_eq!(rank_modular(&IntMatrix::identity(6), DEFAULT_SEED), 6);
        assert_eq!(rank_modular(&IntMatrix::from_fn(4, |_, _| BigInt::one()), DEFAULT_SEED), 1);
        let a = IntMatrix::from_rows(&[vec![3, 0], vec![0, 0]]).unwrap();
        assert_eq!(rank_mod_p(&a, 3), 0);
        assert_eq!(rank_mod_p(&a, 5), 1);
    }
}

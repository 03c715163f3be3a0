//! Exact integer linear algebra plus a numeric symmetric eigensolver used as
//! a cross-check.

mod bareiss;
mod blockdet;
mod charpoly;
mod intmatrix;
mod modular;
mod numeric;
mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

pub use bareiss::{determinant, nullity, rank};
pub use blockdet::{assemble_block_matrix, block_structured_det};
pub use charpoly::{char_poly, char_poly_capped, EXACT_CAP};
pub use intmatrix::IntMatrix;
pub use modular::{is_prime_u64, random_primes, rank_mod_p, rank_modular, DEFAULT_SEED, PRIME_COUNT};
pub use numeric::{numeric_eigen, numeric_spectrum, symmetric_eigen, SymmetricEigen};
pub use poly::CharPoly;

use crate::error::{Error, Result};

/// Above this dimension nullities come from [`rank_modular`].
pub const MODULAR_THRESHOLD: usize = 300;

/// How a reported quantity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Modular,
    Numeric,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::Modular => "modular",
            Self::Numeric => "numeric",
        }
    }

    /// The weaker of two methods.
    pub fn combine(self, other: Self) -> Self {
        self.max(other)
    }
}

/// Nullity by Bareiss up to [`MODULAR_THRESHOLD`], modular rank beyond.
pub fn nullity_auto(a: &IntMatrix, seed: u64) -> (usize, Method) {
    if a.dim() <= MODULAR_THRESHOLD {
        (nullity(a), Method::Exact)
    } else {
        (a.dim() - rank_modular(a, seed), Method::Modular)
    }
}

/// Multiplicity of the rational eigenvalue `lambda` of a symmetric `a`,
/// as the nullity of `q A - p I` for `lambda = p / q`.
pub fn multiplicity(a: &IntMatrix, lambda: &BigRational) -> usize {
    multiplicity_with(a, lambda, DEFAULT_SEED).0
}

pub fn multiplicity_with(a: &IntMatrix, lambda: &BigRational, seed: u64) -> (usize, Method) {
    let m = a.scale(lambda.denom()).shift_diagonal(&-lambda.numer());
    nullity_auto(&m, seed)
}

fn is_square(x: &BigInt) -> bool {
    !x.is_negative() && {
        let r = x.sqrt();
        &r * &r == *x
    }
}

/// Combined multiplicity of the two roots of the irreducible `x^2 - s x + p`,
/// as the nullity of `A^2 - s A + p I`.
pub fn surd_pair_multiplicity(a: &IntMatrix, s: &BigInt, p: &BigInt) -> Result<usize> {
    surd_pair_multiplicity_with(a, s, p, DEFAULT_SEED).map(|(m, _)| m)
}

pub fn surd_pair_multiplicity_with(a: &IntMatrix, s: &BigInt, p: &BigInt, seed: u64) -> Result<(usize, Method)> {
    let disc = s * s - BigInt::from(4) * p;
    if is_square(&disc) {
        return Err(Error::ReduciblePolynomial {
            s: s.to_string(),
            p: p.to_string(),
        });
    }
    let m = a.mul(a).sub(&a.scale(s)).shift_diagonal(p);
    Ok(nullity_auto(&m, seed))
}

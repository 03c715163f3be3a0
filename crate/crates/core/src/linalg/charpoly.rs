use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CharPoly, IntMatrix};
use crate::error::{Error, Result};

/// Default dimension cap for exact characteristic polynomials.
pub const EXACT_CAP: usize = 256;

/// `det(xI - A)` by the Faddeev-LeVerrier recurrence, capped at [`EXACT_CAP`].
pub fn char_poly(a: &IntMatrix) -> Result<CharPoly> {
    char_poly_capped(a, EXACT_CAP)
}

pub fn char_poly_capped(a: &IntMatrix, cap: usize) -> Result<CharPoly> {
    let n = a.dim();
    if n > cap {
        return Err(Error::DimensionTooLarge { dim: n, cap });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return Ok(CharPoly::new(coeffs));
    }
    // am holds A * M_k; M_1 = I
    let mut am = a.clone();
    for k in 1..=n {
        let c = -am.trace() / BigInt::from(k);
        coeffs[n - k] = c.clone();
        if k < n {
            let m = am.shift_diagonal(&c);
            am = a.mul(&m);
        }
    }
    Ok(CharPoly::new(coeffs))
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Integer polynomial with little-endian coefficients and no trailing zeros.
/// Characteristic polynomials are monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Self::new(c)
    }

    /// `x - r`.
    pub fn linear(r: impl Into<BigInt>) -> Self {
        Self::new(vec![-r.into(), BigInt::one()])
    }

    /// `x^2 - s x + p`.
    pub fn quadratic(s: impl Into<BigInt>, p: impl Into<BigInt>) -> Self {
        Self::new(vec![p.into(), -s.into(), BigInt::one()])
    }

    /// Product of `factor^mult` over the list.
    pub fn from_factors<'a>(factors: impl IntoIterator<Item = (&'a CharPoly, usize)>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, (f, m)| acc.mul(&f.pow(m)))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Division by a monic divisor: `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree();
        if self.degree() < dd || self.is_zero() {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient by a monic divisor, if it divides.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Largest m with `divisor^m | self`, together with the cofactor.
    pub fn strip(&self, divisor: &Self) -> (usize, Self) {
        let mut cur = self.clone();
        let mut m = 0;
        while cur.degree() >= divisor.degree() {
            match cur.divide_exact(divisor) {
                Some(q) => {
                    cur = q;
                    m += 1;
                }
                None => break,
            }
        }
        (m, cur)
    }

    /// Polynomial whose roots are `s` times the roots of `self`:
    /// `s^d p(x / s)`.
    pub fn scale_roots(&self, s: &BigInt) -> Self {
        let d = self.degree();
        let mut pow = BigInt::one();
        let mut out = self.coeffs.clone();
        for i in (0..=d).rev() {
            out[i] *= &pow;
            pow *= s;
        }
        Self::new(out)
    }

    /// Integer roots via divisors of the lowest nonzero coefficient.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let Some(low) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(BigInt::zero());
        }
        let c0 = self.coeffs[low].abs();
        let mut d = BigInt::one();
        while &d * &d <= c0 {
            if c0.is_multiple_of(&d) {
                for cand in [d.clone(), &c0 / &d] {
                    for r in [cand.clone(), -cand] {
                        if !roots.contains(&r) && self.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
            d += 1;
        }
        roots.sort();
        roots
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

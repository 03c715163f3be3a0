//! Finite fields GF(p^k) of small order, backed by precomputed tables.
//!
//! Elements are identified by their position in the canonical enumeration:
//! the coefficient vector `(c_0, .., c_{k-1})` of an element maps to the
//! integer `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`, so position 0 is zero,
//! position 1 is one, and the rest follow in lexicographic order with the
//! leading coefficient most significant.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order the table representation supports.
pub const FIELD_ORDER_CAP: u32 = 64;

/// Minimal-weight irreducible moduli, little-endian coefficients, keyed by order.
const BUILTIN_MODULI: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 0, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
    (49, &[1, 0, 1]),
    (64, &[1, 1, 0, 0, 0, 0, 1]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Position in the canonical enumeration.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    q: usize,
    add: Vec<FieldElement>,
    mul: Vec<FieldElement>,
    neg: Vec<FieldElement>,
    inv: Vec<FieldElement>,
}

/// A finite field of order `q = p^k`. Cloning is cheap; tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    modulus: Option<Vec<u32>>,
    tables: Arc<Tables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn poly_rem(mut num: Vec<u32>, den: &[u32], p: u32) -> Vec<u32> {
    // den is monic
    let dd = den.len() - 1;
    while num.len() > dd {
        let lead = *num.last().unwrap() % p;
        let shift = num.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let t = &mut num[shift + i];
                *t = (*t + p * p - (lead * c) % p) % p;
            }
        }
        num.pop();
    }
    num
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        // every monic polynomial of degree d
        let count = (p as usize).pow(d as u32);
        for code in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                cand.push((c % p as usize) as u32);
                c /= p as usize;
            }
            cand.push(1);
            if poly_rem(modulus.to_vec(), &cand, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^k). When `modulus` is absent and `k > 1` the built-in
    /// table supplies one; any supplied modulus is checked for irreducibility.
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if k == 0 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= FIELD_ORDER_CAP)
            .ok_or(Error::UnsupportedOrder {
                order: p.saturating_pow(k),
                cap: FIELD_ORDER_CAP,
            })?;
        let modulus = if k == 1 {
            None
        } else {
            let m: Vec<u32> = match modulus {
                Some(m) => m.to_vec(),
                None => BUILTIN_MODULI
                    .iter()
                    .find(|(q, _)| *q == order)
                    .map(|(_, m)| m.to_vec())
                    .ok_or(Error::UnsupportedOrder {
                        order,
                        cap: FIELD_ORDER_CAP,
                    })?,
            };
            if m.len() != k as usize + 1 {
                return Err(Error::InvalidModulus(format!(
                    "expected {} coefficients, got {}",
                    k + 1,
                    m.len()
                )));
            }
            if m.iter().any(|&c| c >= p) {
                return Err(Error::InvalidModulus("coefficient not reduced mod p".into()));
            }
            if m[k as usize] != 1 {
                return Err(Error::InvalidModulus("modulus must be monic".into()));
            }
            if !is_irreducible(&m, p) {
                return Err(Error::ReducibleModulus { p });
            }
            Some(m)
        };
        let tables = Arc::new(build_tables(p, k, modulus.as_deref()));
        Ok(Self {
            p,
            k,
            modulus,
            tables,
        })
    }

    /// GF(q) for a prime power `q`, using the built-in modulus table.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k, None)
    }

    /// Parses `q`, `p^k`, optionally followed by `:modulus-hex`. The hex
    /// number encodes the modulus coefficients as base-p digits, constant
    /// term least significant.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (order_part, modulus_part) = match text.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (text, None),
        };
        let syntax = || Error::FieldSyntax(text.to_string());
        let (p, k) = match order_part.split_once('^') {
            Some((p, k)) => {
                let p: u32 = p.trim().parse().map_err(|_| syntax())?;
                let k: u32 = k.trim().parse().map_err(|_| syntax())?;
                (p, k)
            }
            None => {
                let q: u32 = order_part.trim().parse().map_err(|_| syntax())?;
                prime_power(q).ok_or(Error::NotPrimePower(q))?
            }
        };
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        let modulus = match modulus_part {
            None => None,
            Some(hex) => {
                let mut value =
                    u64::from_str_radix(hex.trim().trim_start_matches("0x"), 16).map_err(|_| syntax())?;
                let mut coeffs = Vec::new();
                while value > 0 {
                    coeffs.push((value % p as u64) as u32);
                    value /= p as u64;
                }
                Some(coeffs)
            }
        };
        Self::new(p, k, modulus.as_deref())
    }

    /// Canonical textual form accepted by [`FieldSpec::parse`].
    pub fn canonical_string(&self) -> String {
        match &self.modulus {
            None => format!("{}^{}", self.p, self.k),
            Some(m) => {
                let value = m
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64);
                format!("{}^{}:{:x}", self.p, self.k, value)
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    /// Field order q.
    pub fn order(&self) -> u32 {
        self.tables.q as u32
    }

    /// The size parameter n = q - 1.
    pub fn n(&self) -> u32 {
        self.order() - 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element at position `index` of the canonical enumeration.
    pub fn element(&self, index: usize) -> Option<FieldElement> {
        (index < self.tables.q).then_some(FieldElement(index as u16))
    }

    /// Element for an integer, reduced into the prime subfield.
    pub fn from_int(&self, value: i64) -> FieldElement {
        FieldElement(value.rem_euclid(self.p as i64) as u16)
    }

    /// All elements in canonical order: 0, 1, then the rest.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.tables.q as u16).map(FieldElement)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.tables.q as u16).map(FieldElement)
    }

    #[inline]
    fn at(&self, table: &[FieldElement], a: FieldElement, b: FieldElement) -> FieldElement {
        table[a.index() * self.tables.q + b.index()]
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.at(&self.tables.add, a, b)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.at(&self.tables.mul, a, b)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.tables.neg[a.index()]
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.tables.inv[a.index()])
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Coefficient vector, constant term first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.index() as u32;
        (0..self.k)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    /// Human-readable element: a residue for prime fields, a polynomial in x otherwise.
    pub fn format(&self, a: FieldElement) -> String {
        if self.k == 1 {
            return a.index().to_string();
        }
        let coeffs = self.coefficients(a);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(deg, &c)| {
                let coef = if c == 1 && deg > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match deg {
                    0 => c.to_string(),
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{deg}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn build_tables(p: u32, k: u32, modulus: Option<&[u32]>) -> Tables {
    let q = p.pow(k) as usize;
    let decode = |v: usize| -> Vec<u32> {
        let mut v = v as u32;
        (0..k)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    };
    let encode = |c: &[u32]| -> FieldElement {
        FieldElement(c.iter().rev().fold(0u32, |acc, &x| acc * p + x) as u16)
    };
    let coeffs: Vec<Vec<u32>> = (0..q).map(decode).collect();
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for a in &coeffs {
        for b in &coeffs {
            let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
            add.push(encode(&s));
            let mut prod = vec![0u32; 2 * k as usize - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let reduced = match modulus {
                Some(m) => poly_rem(prod, m, p),
                None => prod,
            };
            let mut r = reduced;
            r.resize(k as usize, 0);
            mul.push(encode(&r));
        }
    }
    let neg = (0..q)
        .map(|a| {
            let c: Vec<u32> = coeffs[a].iter().map(|&x| (p - x) % p).collect();
            encode(&c)
        })
        .collect();
    let mut inv = vec![FieldElement::ZERO; q];
    for a in 1..q {
        for b in 1..q {
            if mul[a * q + b] == FieldElement::ONE {
                inv[a] = FieldElement(b as u16);
                break;
            }
        }
    }
    Tables {
        q,
        add,
        mul,
        neg,
        inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let gf2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(gf2.n(), 1);
        assert_eq!(gf2.add(gf2.one(), gf2.one()), gf2.zero());

        let gf4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(gf4.n(), 3);
        let x = gf4.element(2).unwrap();
        assert_eq!(gf4.format(x), "x");
        assert_eq!(gf4.format(gf4.mul(x, x)), "x+1");

        assert_eq!(FieldSpec::new(4, 1, None), Err(Error::NonPrimeCharacteristic(4)));
    }

    #[test]
    fn inverse_in_gf5() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(3));
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn enumeration_order() {
        let gf4 = FieldSpec::with_order(4).unwrap();
        let names: Vec<String> = gf4.elements().map(|a| gf4.format(a)).collect();
        assert_eq!(names, ["0", "1", "x", "x+1"]);
        let gf3 = FieldSpec::with_order(3).unwrap();
        let names: Vec<String> = gf3.elements().map(|a| gf3.format(a)).collect();
        assert_eq!(names, ["0", "1", "2"]);
    }

    #[test]
    fn rejects_reducible_and_bad_moduli() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus { p: 2 })
        );
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 1])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 7, None),
            Err(Error::UnsupportedOrder { order: 128, .. })
        ));
    }

    #[test]
    fn builtin_moduli_are_irreducible() {
        for &(q, m) in BUILTIN_MODULI {
            let (p, _) = prime_power(q).unwrap();
            assert!(is_irreducible(m, p), "modulus for {q}");
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(FieldSpec::parse("3").unwrap().order(), 3);
        assert_eq!(FieldSpec::parse("2^2").unwrap().order(), 4);
        let f = FieldSpec::parse("2^2:7").unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(FieldSpec::parse("6"), Err(Error::NotPrimePower(6)));
        assert!(matches!(FieldSpec::parse("abc"), Err(Error::FieldSyntax(_))));
        for q in [2, 3, 4, 8, 9, 27] {
            let f = FieldSpec::with_order(q).unwrap();
            assert_eq!(FieldSpec::parse(&f.canonical_string()).unwrap(), f);
        }
    }
}

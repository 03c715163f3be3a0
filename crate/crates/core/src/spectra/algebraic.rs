use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// An eigenvalue that is either rational or a quadratic surd
/// `(a + b sqrt(d)) / c` with `d > 1` squarefree, `b != 0`, `c > 0` and
/// `gcd(a, b, c) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraicEigenvalue {
    Rational(BigRational),
    Surd { a: BigInt, b: BigInt, d: BigInt, c: BigInt },
}

/// Splits `d > 0` as `f^2 * r` with r squarefree.
fn square_part(d: &BigInt) -> (BigInt, BigInt) {
    let mut f = BigInt::one();
    let mut r = d.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= r {
        let sq = &p * &p;
        while r.is_multiple_of(&sq) {
            r /= &sq;
            f *= &p;
        }
        p += 1;
    }
    (f, r)
}

/// Sign of `p + q sqrt(m)` for `m > 0` not a square (or `q = 0`).
fn sign_pq(p: &BigRational, q: &BigRational, m: &BigInt) -> Ordering {
    let sp = p.cmp(&BigRational::zero());
    let sq = q.cmp(&BigRational::zero());
    if sq == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal || sp == sq {
        return sq;
    }
    let lhs = p * p;
    let rhs = q * q * BigRational::from_integer(m.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    }
}

impl AlgebraicEigenvalue {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Self::Rational(BigRational::from_integer(v.into()))
    }

    pub fn rational(v: BigRational) -> Self {
        Self::Rational(v)
    }

    /// `(a + b sqrt(d)) / c`, normalized; collapses to a rational when the
    /// root is exact. Requires `d >= 0`, `c != 0`.
    pub fn surd(a: BigInt, b: BigInt, d: BigInt, c: BigInt) -> Self {
        assert!(!c.is_zero() && !d.is_negative());
        let (f, r) = square_part(&d);
        let b = b * f;
        if b.is_zero() || r.is_zero() || r.is_one() {
            let num = if r.is_one() { a + b } else { a };
            return Self::Rational(BigRational::new(num, c));
        }
        let (a, b, c) = if c.is_negative() { (-a, -b, -c) } else { (a, b, c) };
        let g = a.gcd(&b).gcd(&c);
        Self::Surd {
            a: a / &g,
            b: b / &g,
            d: r,
            c: c / &g,
        }
    }

    /// Roots of `x^2 - s x + p`, larger first.
    pub fn quadratic_roots(s: &BigInt, p: &BigInt) -> [Self; 2] {
        let disc = s * s - BigInt::from(4) * p;
        assert!(!disc.is_negative(), "complex roots");
        let two = BigInt::from(2);
        [
            Self::surd(s.clone(), BigInt::one(), disc.clone(), two.clone()),
            Self::surd(s.clone(), -BigInt::one(), disc, two),
        ]
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Self::Rational(_))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Self::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            Self::Rational(_) => self.clone(),
            Self::Surd { a, b, d, c } => Self::Surd {
                a: a.clone(),
                b: -b,
                d: d.clone(),
                c: c.clone(),
            },
        }
    }

    /// `(s, p)` of the monic minimal quadratic `x^2 - s x + p` of a surd.
    pub fn minimal_quadratic(&self) -> Option<(BigRational, BigRational)> {
        match self {
            Self::Rational(_) => None,
            Self::Surd { a, b, d, c } => {
                let s = BigRational::new(BigInt::from(2) * a, c.clone());
                let p = BigRational::new(a * a - b * b * d, c * c);
                Some((s, p))
            }
        }
    }

    /// `(rational part, surd coefficient, radicand)`.
    fn parts(&self) -> (BigRational, BigRational, BigInt) {
        match self {
            Self::Rational(r) => (r.clone(), BigRational::zero(), BigInt::one()),
            Self::Surd { a, b, d, c } => (
                BigRational::new(a.clone(), c.clone()),
                BigRational::new(b.clone(), c.clone()),
                d.clone(),
            ),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (r, q, d) = self.parts();
        r.to_f64().unwrap_or(f64::NAN) + q.to_f64().unwrap_or(f64::NAN) * d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Exact sign of `self - other`.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let (r1, q1, d1) = self.parts();
        let (r2, q2, d2) = other.parts();
        let u = r1 - r2;
        if d1 == d2 || q2.is_zero() {
            let q = if d1 == d2 { &q1 - &q2 } else { q1.clone() };
            return sign_pq(&u, &q, &d1);
        }
        if q1.is_zero() {
            return sign_pq(&u, &-q2, &d2);
        }
        // X + Y with X = u + q1 sqrt(d1), Y = -q2 sqrt(d2)
        let w = -q2;
        let sx = sign_pq(&u, &q1, &d1);
        let sy = w.cmp(&BigRational::zero());
        if sx == Ordering::Equal || sx == sy {
            return sy;
        }
        if sy == Ordering::Equal {
            return sx;
        }
        let d1r = BigRational::from_integer(d1.clone());
        let d2r = BigRational::from_integer(d2);
        let p = &u * &u + &q1 * &q1 * d1r - &w * &w * d2r;
        let q = BigRational::from_integer(BigInt::from(2)) * &u * &q1;
        match sign_pq(&p, &q, &d1) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

impl PartialOrd for AlgebraicEigenvalue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicEigenvalue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for AlgebraicEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(r) => write!(f, "{r}"),
            Self::Surd { a, b, d, c } => {
                let op = if b.is_negative() { '-' } else { '+' };
                let mag = b.abs();
                let root = if mag.is_one() {
                    format!("sqrt({d})")
                } else {
                    format!("{mag}sqrt({d})")
                };
                let body = if a.is_zero() {
                    format!("{}{root}", if op == '-' { "-" } else { "" })
                } else {
                    format!("{a} {op} {root}")
                };
                if c.is_one() {
                    f.write_str(&body)
                } else {
                    write!(f, "({body})/{c}")
                }
            }
        }
    }
}

impl Serialize for AlgebraicEigenvalue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exact integer square root test.
pub(crate) fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

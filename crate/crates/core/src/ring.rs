//! The ring M2(F) of 2x2 matrices over a finite field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Default field-order cap for pipelines that enumerate all of Z(M2(F)).
pub const GAMMA_ORDER_CAP: u32 = 16;

/// A 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2::new(
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ZERO,
    );
    pub const IDENTITY: Mat2 = Mat2::new(
        FieldElement::ONE,
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ONE,
    );

    pub const fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Self { a, b, c, d }
    }

    /// Builds a matrix from integer entries reduced into the prime subfield.
    pub fn from_ints(f: &FieldSpec, [a, b, c, d]: [i64; 4]) -> Self {
        Self::new(f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d))
    }

    pub fn entries(&self) -> [FieldElement; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn mul(&self, rhs: &Mat2, f: &FieldSpec) -> Mat2 {
        Mat2::new(
            f.add(f.mul(self.a, rhs.a), f.mul(self.b, rhs.c)),
            f.add(f.mul(self.a, rhs.b), f.mul(self.b, rhs.d)),
            f.add(f.mul(self.c, rhs.a), f.mul(self.d, rhs.c)),
            f.add(f.mul(self.c, rhs.b), f.mul(self.d, rhs.d)),
        )
    }

    pub fn add(&self, rhs: &Mat2, f: &FieldSpec) -> Mat2 {
        Mat2::new(
            f.add(self.a, rhs.a),
            f.add(self.b, rhs.b),
            f.add(self.c, rhs.c),
            f.add(self.d, rhs.d),
        )
    }

    pub fn scale(&self, s: FieldElement, f: &FieldSpec) -> Mat2 {
        Mat2::new(f.mul(s, self.a), f.mul(s, self.b), f.mul(s, self.c), f.mul(s, self.d))
    }

    pub fn det(&self, f: &FieldSpec) -> FieldElement {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn trace(&self, f: &FieldSpec) -> FieldElement {
        f.add(self.a, self.d)
    }

    pub fn square(&self, f: &FieldSpec) -> Mat2 {
        self.mul(self, f)
    }

    /// `x y = 0` or `y x = 0`.
    pub fn annihilates(&self, other: &Mat2, f: &FieldSpec) -> bool {
        self.mul(other, f).is_zero() || other.mul(self, f).is_zero()
    }

    pub fn is_idempotent(&self, f: &FieldSpec) -> bool {
        self.square(f) == *self
    }

    pub fn is_nilpotent(&self, f: &FieldSpec) -> bool {
        self.square(f).is_zero()
    }

    pub fn is_unit(&self, f: &FieldSpec) -> bool {
        !self.det(f).is_zero()
    }

    /// Nonzero and singular.
    pub fn is_zero_divisor(&self, f: &FieldSpec) -> bool {
        !self.is_zero() && self.det(f).is_zero()
    }

    /// First nonzero entry in reading order.
    pub fn leading_entry(&self) -> Option<FieldElement> {
        self.entries().into_iter().find(|e| !e.is_zero())
    }

    pub fn display<'a>(&'a self, f: &'a FieldSpec) -> impl fmt::Display + 'a {
        DisplayMat2 { m: self, f }
    }
}

struct DisplayMat2<'a> {
    m: &'a Mat2,
    f: &'a FieldSpec,
}

impl fmt::Display for DisplayMat2<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.m.entries().map(|e| self.f.format(e));
        write!(out, "[[{a},{b}],[{c},{d}]]")
    }
}

/// All of M2(F) in lexicographic (a, b, c, d) order.
pub fn all_matrices(f: &FieldSpec) -> impl Iterator<Item = Mat2> + '_ {
    let els = f.elements();
    els.clone().flat_map(move |a| {
        let els = els.clone();
        els.clone().flat_map(move |b| {
            let els = els.clone();
            els.clone()
                .flat_map(move |c| els.clone().map(move |d| Mat2::new(a, b, c, d)))
        })
    })
}

/// The nonzero zero-divisors Z(M2(F)) in lexicographic order, capped at
/// [`GAMMA_ORDER_CAP`].
pub fn zero_divisors(f: &FieldSpec) -> Result<Vec<Mat2>> {
    zero_divisors_capped(f, GAMMA_ORDER_CAP)
}

pub fn zero_divisors_capped(f: &FieldSpec, cap: u32) -> Result<Vec<Mat2>> {
    if f.order() > cap {
        return Err(Error::UnsupportedOrder {
            order: f.order(),
            cap,
        });
    }
    Ok(all_matrices(f).filter(|m| m.is_zero_divisor(f)).collect())
}

/// |GL2(F)| members in lexicographic order.
pub fn general_linear_group(f: &FieldSpec) -> Vec<Mat2> {
    all_matrices(f).filter(|m| m.is_unit(f)).collect()
}

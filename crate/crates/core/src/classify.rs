//! Canonical idempotent and nilpotent forms in Z(M2(F)) and the partition of
//! Z(M2(F)) into classes of the relation `A ~ B  <=>  A = UB = BV` for
//! invertible U, V.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builder::vertex_sets;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::ring::{zero_divisors, Mat2};

/// A named idempotent or nilpotent template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CanonicalForm {
    /// `[[0,0],[0,1]]`
    E0,
    /// `[[1,0],[0,0]]`
    ETop0,
    /// `[[0,0],[a,1]]`
    ESub(FieldElement),
    /// `[[1,a],[0,0]]`
    ESup(FieldElement),
    /// `[[1,0],[a,0]]`
    FSub(FieldElement),
    /// `[[0,a],[0,1]]`
    FSup(FieldElement),
    /// `[[i, j(1-i)], [i/j, 1-i]]` with i not in {0, 1}, j nonzero.
    EPair { i: FieldElement, j: FieldElement },
    /// `[[0,1],[0,0]]`
    N,
    /// `[[0,0],[1,0]]`
    M,
    /// `[[1,k],[-1/k,-1]]` with k nonzero.
    Nk(FieldElement),
}

impl CanonicalForm {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, Self::N | Self::M | Self::Nk(_))
    }

    pub fn is_idempotent(&self) -> bool {
        !self.is_nilpotent()
    }

    /// Checks the parameter constraints of the template.
    pub fn is_valid(&self, f: &FieldSpec) -> bool {
        match *self {
            Self::ESub(a) | Self::ESup(a) | Self::FSub(a) | Self::FSup(a) | Self::Nk(a) => {
                !a.is_zero() && a.index() < f.order() as usize
            }
            Self::EPair { i, j } => i != f.zero() && i != f.one() && !j.is_zero(),
            _ => true,
        }
    }

    /// The matrix this form denotes. Invalid parameters give an error.
    pub fn materialize(&self, f: &FieldSpec) -> Result<Mat2> {
        if !self.is_valid(f) {
            return Err(Error::DivisionByZero);
        }
        let (z, o) = (f.zero(), f.one());
        Ok(match *self {
            Self::E0 => Mat2::new(z, z, z, o),
            Self::ETop0 => Mat2::new(o, z, z, z),
            Self::ESub(a) => Mat2::new(z, z, a, o),
            Self::ESup(a) => Mat2::new(o, a, z, z),
            Self::FSub(a) => Mat2::new(o, z, a, z),
            Self::FSup(a) => Mat2::new(z, a, z, o),
            Self::EPair { i, j } => {
                let one_minus_i = f.sub(o, i);
                Mat2::new(i, f.mul(j, one_minus_i), f.div(i, j)?, one_minus_i)
            }
            Self::N => Mat2::new(z, o, z, z),
            Self::M => Mat2::new(z, z, o, z),
            Self::Nk(k) => Mat2::new(o, k, f.neg(f.inv(k)?), f.neg(o)),
        })
    }

    /// Label in the usual subscript/superscript notation, e.g. `E^{2}`, `E_{2,1}`, `N_{x+1}`.
    pub fn label(&self, f: &FieldSpec) -> String {
        let p = |a: FieldElement| f.format(a);
        match *self {
            Self::E0 => "E_0".into(),
            Self::ETop0 => "E^0".into(),
            Self::ESub(a) => format!("E_{{{}}}", p(a)),
            Self::ESup(a) => format!("E^{{{}}}", p(a)),
            Self::FSub(a) => format!("F_{{{}}}", p(a)),
            Self::FSup(a) => format!("F^{{{}}}", p(a)),
            Self::EPair { i, j } => format!("E_{{{},{}}}", p(i), p(j)),
            Self::N => "N".into(),
            Self::M => "M".into(),
            Self::Nk(k) => format!("N_{{{}}}", p(k)),
        }
    }

    /// Short tag name without parameters.
    pub fn tag(&self) -> &'static str {
        match self {
            Self::E0 => "E0",
            Self::ETop0 => "Etop0",
            Self::ESub(_) => "E_sub",
            Self::ESup(_) => "E_sup",
            Self::FSub(_) => "F_sub",
            Self::FSup(_) => "F_sup",
            Self::EPair { .. } => "E_pair",
            Self::N => "N",
            Self::M => "M",
            Self::Nk(_) => "N_k",
        }
    }

    /// Template parameters in declaration order.
    pub fn parameters(&self) -> Vec<FieldElement> {
        match *self {
            Self::ESub(a) | Self::ESup(a) | Self::FSub(a) | Self::FSup(a) | Self::Nk(a) => vec![a],
            Self::EPair { i, j } => vec![i, j],
            _ => Vec::new(),
        }
    }
}

/// Matches a nonzero singular idempotent against the templates.
pub fn idempotent_form(m: &Mat2, f: &FieldSpec) -> Result<CanonicalForm> {
    if m.is_zero() || !m.is_idempotent(f) || !m.det(f).is_zero() {
        return Err(Error::NotIdempotent);
    }
    let (z, o) = (f.zero(), f.one());
    // trace 1 and bc = a(1 - a); a in {0, 1} forces one of b, c to vanish
    let form = if m.a == z {
        match (m.b == z, m.c == z) {
            (true, true) => CanonicalForm::E0,
            (true, false) => CanonicalForm::ESub(m.c),
            _ => CanonicalForm::FSup(m.b),
        }
    } else if m.a == o {
        match (m.b == z, m.c == z) {
            (true, true) => CanonicalForm::ETop0,
            (false, true) => CanonicalForm::ESup(m.b),
            _ => CanonicalForm::FSub(m.c),
        }
    } else {
        let i = m.a;
        let j = f.div(m.b, f.sub(o, i))?;
        CanonicalForm::EPair { i, j }
    };
    debug_assert_eq!(form.materialize(f).ok(), Some(*m));
    Ok(form)
}

/// Writes a nonzero square-zero matrix as `a * form` with form in {N, M, N_k}.
pub fn nilpotent_form(m: &Mat2, f: &FieldSpec) -> Result<(FieldElement, CanonicalForm)> {
    if m.is_zero() || !m.is_nilpotent(f) {
        return Err(Error::NotNilpotent);
    }
    let out = if m.a.is_zero() {
        if !m.b.is_zero() {
            (m.b, CanonicalForm::N)
        } else {
            (m.c, CanonicalForm::M)
        }
    } else {
        (m.a, CanonicalForm::Nk(f.div(m.b, m.a)?))
    };
    debug_assert_eq!(out.1.materialize(f).ok().map(|r| r.scale(out.0, f)), Some(*m));
    Ok(out)
}

/// Decomposes a zero-divisor as `scalar * form` for its class representative.
pub fn canonical_form(m: &Mat2, f: &FieldSpec) -> Result<(FieldElement, CanonicalForm)> {
    if !m.is_zero_divisor(f) {
        return Err(Error::NotZeroDivisor);
    }
    if m.is_nilpotent(f) {
        return nilpotent_form(m, f);
    }
    // rank one, so B^2 = tr(B) B and B / tr(B) is idempotent
    let t = m.trace(f);
    let e = m.scale(f.inv(t)?, f);
    Ok((t, idempotent_form(&e, f)?))
}

/// The distinguished member of the class of `m`: its unique idempotent, or
/// the nilpotent template with unit leading scalar.
pub fn class_representative(m: &Mat2, f: &FieldSpec) -> Result<Mat2> {
    let (_, form) = canonical_form(m, f)?;
    form.materialize(f)
}

/// Whether `a = s b` for some nonzero scalar s.
pub fn related(a: &Mat2, b: &Mat2, f: &FieldSpec) -> Result<bool> {
    if !a.is_zero_divisor(f) || !b.is_zero_divisor(f) {
        return Err(Error::NotZeroDivisor);
    }
    let (ea, eb) = (a.entries(), b.entries());
    let pos = eb.iter().position(|e| !e.is_zero()).expect("nonzero");
    let s = f.div(ea[pos], eb[pos])?;
    Ok(!s.is_zero() && b.scale(s, f) == *a)
}

/// One class of `~`: the representative and its scalar orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZClass {
    pub representative: CanonicalForm,
    pub members: Vec<Mat2>,
}

impl ZClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The partition of Z(M2(F)) into classes, in the S_0, S_j, T_j vertex order.
/// Members are listed by their scalar in canonical field order.
pub fn all_classes(f: &FieldSpec) -> Result<Vec<ZClass>> {
    let zds = zero_divisors(f)?;
    let decomposed: Vec<(FieldElement, CanonicalForm, Mat2)> = zds
        .par_iter()
        .map(|m| canonical_form(m, f).map(|(s, form)| (s, form, *m)))
        .collect::<Result<_>>()?;
    let mut groups: HashMap<CanonicalForm, Vec<(FieldElement, Mat2)>> = HashMap::new();
    for (s, form, m) in decomposed {
        groups.entry(form).or_default().push((s, m));
    }
    let order: Vec<CanonicalForm> = vertex_sets(f)
        .into_iter()
        .flat_map(|set| set.members)
        .collect();
    let mut classes = Vec::with_capacity(order.len());
    for rep in order {
        let mut members = groups.remove(&rep).unwrap_or_default();
        members.sort();
        classes.push(ZClass {
            representative: rep,
            members: members.into_iter().map(|(_, m)| m).collect(),
        });
    }
    // forms outside the vertex-set order would mean the order misses a class
    debug_assert!(groups.is_empty());
    Ok(classes)
}

/// The n(n-1) idempotents of the E_{i,j} family; no operation consumes it.
pub fn pair_idempotent_count(f: &FieldSpec) -> u64 {
    let n = f.n() as u64;
    n * (n - 1)
}

//! Table of zero products among the canonical forms, each row checked over
//! every admissible parameter choice.

use serde::Serialize;

use crate::classify::CanonicalForm::{self, *};
use crate::field::{FieldElement, FieldSpec};
use crate::ring::Mat2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub id: usize,
    pub statement: &'static str,
    pub checked: usize,
    pub failures: usize,
}

impl RelationCheck {
    /// Rows with no admissible parameters (only over GF(2)) hold vacuously.
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

struct Ctx<'a> {
    f: &'a FieldSpec,
    nonzero: Vec<FieldElement>,
    /// Elements outside {0, 1}, the admissible first index of E_{i,j}.
    generic: Vec<FieldElement>,
}

impl Ctx<'_> {
    fn m(&self, c: CanonicalForm) -> Mat2 {
        c.materialize(self.f).expect("valid parameters")
    }

    fn zero(&self, x: CanonicalForm, y: CanonicalForm) -> bool {
        self.m(x).mul(&self.m(y), self.f).is_zero()
    }

    /// `a / b`, or `None` when b vanishes (the condition is then unsatisfiable).
    fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.f.div(a, b).ok()
    }

    fn neg_inv(&self, a: FieldElement) -> FieldElement {
        self.f.neg(self.f.inv(a).expect("nonzero"))
    }
}

type Row = (&'static str, fn(&Ctx) -> (usize, usize));

fn tally(it: impl Iterator<Item = bool>) -> (usize, usize) {
    it.fold((0, 0), |(c, bad), ok| (c + 1, bad + usize::from(!ok)))
}

fn pairs<'a>(c: &'a Ctx<'a>) -> impl Iterator<Item = (FieldElement, FieldElement)> + 'a {
    c.nonzero.iter().flat_map(move |&a| c.nonzero.iter().map(move |&b| (a, b)))
}

/// `(a_i, a_k, a_j)` with a_i outside {0, 1} and a_k, a_j nonzero.
fn triples<'a>(c: &'a Ctx<'a>) -> impl Iterator<Item = (FieldElement, FieldElement, FieldElement)> + 'a {
    c.generic
        .iter()
        .flat_map(move |&i| pairs(c).map(move |(k, j)| (i, k, j)))
}

const ROWS: [Row; 14] = [
    ("F_{a_j}E_{a_k} = F^{a_j}E^{a_k} = 0", |c| {
        tally(pairs(c).map(|(j, k)| c.zero(FSub(j), ESub(k)) && c.zero(FSup(j), ESup(k))))
    }),
    ("E_{a_j}F^{a_k} = E^{a_j}F_{a_k} = 0 iff a_k = -1/a_j", |c| {
        tally(pairs(c).flat_map(|(j, k)| {
            let cond = k == c.neg_inv(j);
            [c.zero(ESub(j), FSup(k)) == cond, c.zero(ESup(j), FSub(k)) == cond]
        }))
    }),
    ("E_{a_j}N_{a_k} = 0 iff a_k = 1/a_j", |c| {
        tally(pairs(c).map(|(j, k)| c.zero(ESub(j), Nk(k)) == (c.div(c.f.one(), j) == Some(k))))
    }),
    ("E^{a_j}N_{a_k} = 0 iff a_k = a_j", |c| {
        tally(pairs(c).map(|(j, k)| c.zero(ESup(j), Nk(k)) == (k == j)))
    }),
    ("N_{a_k}F_{a_j} = 0 iff a_k = -1/a_j", |c| {
        tally(pairs(c).map(|(j, k)| c.zero(Nk(k), FSub(j)) == (k == c.neg_inv(j))))
    }),
    ("N_{a_k}F^{a_j} = 0 iff a_k = -a_j", |c| {
        tally(pairs(c).map(|(j, k)| c.zero(Nk(k), FSup(j)) == (k == c.f.neg(j))))
    }),
    ("E_{a_j}E_{a_i,a_k} = 0 iff a_k = -1/a_j", |c| {
        tally(triples(c).map(|(i, k, j)| c.zero(ESub(j), EPair { i, j: k }) == (k == c.neg_inv(j))))
    }),
    ("E^{a_j}E_{a_i,a_k} = 0 iff a_k = -a_j", |c| {
        tally(triples(c).map(|(i, k, j)| c.zero(ESup(j), EPair { i, j: k }) == (k == c.f.neg(j))))
    }),
    ("E_{a_i,a_k}F_{a_j} = 0 iff a_i = a_k/(a_k - 1/a_j)", |c| {
        tally(triples(c).map(|(i, k, j)| {
            let inv_j = c.f.inv(j).expect("nonzero");
            let cond = c.div(k, c.f.sub(k, inv_j)) == Some(i);
            c.zero(EPair { i, j: k }, FSub(j)) == cond
        }))
    }),
    ("E_{a_i,a_k}F^{a_j} = 0 iff a_i = a_k/(a_k - a_j)", |c| {
        tally(triples(c).map(|(i, k, j)| {
            let cond = c.div(k, c.f.sub(k, j)) == Some(i);
            c.zero(EPair { i, j: k }, FSup(j)) == cond
        }))
    }),
    ("E_{a_i,a_k}N_{a_j} = 0 iff a_i = a_k/(a_k + a_j)", |c| {
        tally(triples(c).map(|(i, k, j)| {
            let cond = c.div(k, c.f.add(k, j)) == Some(i);
            c.zero(EPair { i, j: k }, Nk(j)) == cond
        }))
    }),
    ("N_{a_j}E_{a_i,a_k} = 0 iff a_k = -a_j", |c| {
        tally(triples(c).map(|(i, k, j)| c.zero(Nk(j), EPair { i, j: k }) == (k == c.f.neg(j))))
    }),
    ("E_{a_i,a_j}E_{a_l,a_k} = 0 iff a_i = a_j/(a_j - a_k)", |c| {
        tally(triples(c).flat_map(|(i, j, k)| {
            c.generic.iter().map(move |&l| {
                let cond = c.div(j, c.f.sub(j, k)) == Some(i);
                c.zero(EPair { i, j }, EPair { i: l, j: k }) == cond
            })
        }))
    }),
    (
        "E_0E^{a_j} = F_{a_j}E_0 = E^0E_{a_j} = F^{a_j}E^0 = ME_{a_j} = F_{a_j}M = NE^{a_j} = F^{a_j}N = E_0E^0 = 0",
        |c| {
            tally(c.nonzero.iter().map(|&a| {
                [
                    (E0, ESup(a)),
                    (FSub(a), E0),
                    (ETop0, ESub(a)),
                    (FSup(a), ETop0),
                    (M, ESub(a)),
                    (FSub(a), M),
                    (N, ESup(a)),
                    (FSup(a), N),
                    (E0, ETop0),
                ]
                .into_iter()
                .all(|(x, y)| c.zero(x, y))
            }))
        },
    ),
];

/// Checks every row of the table over all parameters of `f`.
pub fn check_relations(f: &FieldSpec) -> Vec<RelationCheck> {
    let ctx = Ctx {
        f,
        nonzero: f.nonzero().collect(),
        generic: f.elements().filter(|&e| e != f.zero() && e != f.one()).collect(),
    };
    ROWS.iter()
        .enumerate()
        .map(|(i, (statement, run))| {
            let (checked, failures) = run(&ctx);
            RelationCheck {
                id: i + 1,
                statement,
                checked,
                failures,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_holds_over_gf3() {
        let f = FieldSpec::with_order(3).unwrap();
        for row in check_relations(&f) {
            assert!(row.pass(), "{row:?}");
        }
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::builder::{build_gamma, build_h, h_vertices};
use crate::classify::CanonicalForm;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::graph::LoopPolicy;
use crate::linalg::{char_poly, multiplicity, numeric_spectrum, CharPoly, IntMatrix};

/// Which diagonal the correction matrix T carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TReading {
    /// Ones at the n vertices `N_k` only.
    NkOnly,
    /// Ones at all n + 2 nilpotent vertices.
    AllNilpotent,
}

/// Diagonal 0/1 matrix in H vertex order.
pub fn t_matrix(f: &FieldSpec, reading: TReading) -> IntMatrix {
    let forms = h_vertices(f);
    IntMatrix::from_fn(forms.len(), |i, j| {
        let hit = i == j
            && match reading {
                TReading::NkOnly => matches!(forms[i], CanonicalForm::Nk(_)),
                TReading::AllNilpotent => forms[i].is_nilpotent(),
            };
        BigInt::from(u8::from(hit))
    })
}

/// `T + A(H)` with the looped H.
pub fn t_plus_a(f: &FieldSpec, reading: TReading) -> IntMatrix {
    build_h(f, LoopPolicy::LoopsAllowed)
        .adjacency_matrix()
        .add(&t_matrix(f, reading))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorollaryVariant {
    /// Fixed part together with `sigma(T + A(H))`.
    Statement,
    /// Fixed part together with `n * sigma(T + A(H))`.
    Proof,
    /// Fixed part together with the spectrum of the class quotient
    /// `n A(H) + (n - 1) I_nil`, H without loops.
    Quotient,
}

impl CorollaryVariant {
    pub const ALL: [CorollaryVariant; 3] = [Self::Statement, Self::Proof, Self::Quotient];

    pub fn name(self) -> &'static str {
        match self {
            Self::Statement => "statement",
            Self::Proof => "proof",
            Self::Quotient => "quotient",
        }
    }
}

/// Multiplicities of 0 and -1 outside the quotient:
/// `((n+1)(n+2)(n-1), (n+2)(n-1))`.
pub fn fixed_part(n: u32) -> (usize, usize) {
    let n = n as usize;
    ((n + 1) * (n + 2) * (n - 1), (n + 2) * (n - 1))
}

#[derive(Debug, Clone)]
pub struct CorollaryPrediction {
    pub variant: CorollaryVariant,
    pub fixed_zero: usize,
    pub fixed_minus_one: usize,
    /// The `(n+2)^2` square matrix whose spectrum completes the prediction.
    pub matrix: IntMatrix,
    /// `x^a (x+1)^b` times the characteristic polynomial of `matrix`.
    pub poly: CharPoly,
}

impl CorollaryPrediction {
    /// Predicted eigenvalues, descending.
    pub fn numeric_values(&self) -> Result<Vec<f64>> {
        let mut v = numeric_spectrum(&self.matrix)?;
        v.extend(std::iter::repeat_n(0.0, self.fixed_zero));
        v.extend(std::iter::repeat_n(-1.0, self.fixed_minus_one));
        v.sort_by(|a, b| b.total_cmp(a));
        Ok(v)
    }
}

/// The quotient matrix of a variant; statement and proof use `reading` for T.
pub fn variant_matrix(f: &FieldSpec, variant: CorollaryVariant, reading: TReading) -> IntMatrix {
    let n = BigInt::from(f.n());
    match variant {
        CorollaryVariant::Statement => t_plus_a(f, reading),
        CorollaryVariant::Proof => t_plus_a(f, reading).scale(&n),
        CorollaryVariant::Quotient => build_h(f, LoopPolicy::Simple)
            .adjacency_matrix()
            .scale(&n)
            .add(&t_matrix(f, TReading::AllNilpotent).scale(&(n - 1))),
    }
}

/// Predicted adjacency spectrum of Γ(M2(F)) under `variant`, T read as
/// ones at the `N_k` vertices.
pub fn gamma_spectrum_via_join(f: &FieldSpec, variant: CorollaryVariant) -> Result<CorollaryPrediction> {
    gamma_spectrum_via_join_with(f, variant, TReading::NkOnly)
}

pub fn gamma_spectrum_via_join_with(
    f: &FieldSpec,
    variant: CorollaryVariant,
    reading: TReading,
) -> Result<CorollaryPrediction> {
    let (z, m) = fixed_part(f.n());
    let matrix = variant_matrix(f, variant, reading);
    let poly = CharPoly::from_factors([
        (&CharPoly::monomial(1), z),
        (&CharPoly::linear(-1), m),
        (&char_poly(&matrix)?, 1),
    ]);
    Ok(CorollaryPrediction {
        variant,
        fixed_zero: z,
        fixed_minus_one: m,
        matrix,
        poly,
    })
}

/// Exact characteristic polynomial of A(Γ(M2(F))).
pub fn gamma_char_poly(f: &FieldSpec) -> Result<CharPoly> {
    char_poly(&build_gamma(f)?.adjacency_matrix())
}

/// Multiplicities of 0 and -1 in Γ minus those in the class quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPartCheck {
    pub expected: (usize, usize),
    pub gamma: (usize, usize),
    pub quotient: (usize, usize),
}

impl FixedPartCheck {
    pub fn pass(&self) -> bool {
        self.gamma.0 >= self.quotient.0
            && self.gamma.1 >= self.quotient.1
            && (self.gamma.0 - self.quotient.0, self.gamma.1 - self.quotient.1) == self.expected
    }
}

pub fn check_fixed_part(f: &FieldSpec) -> Result<FixedPartCheck> {
    let zero = BigRational::from_integer(0.into());
    let minus_one = BigRational::from_integer((-1).into());
    let gamma = build_gamma(f)?.adjacency_matrix();
    let quot = variant_matrix(f, CorollaryVariant::Quotient, TReading::AllNilpotent);
    Ok(FixedPartCheck {
        expected: fixed_part(f.n()),
        gamma: (multiplicity(&gamma, &zero), multiplicity(&gamma, &minus_one)),
        quotient: (multiplicity(&quot, &zero), multiplicity(&quot, &minus_one)),
    })
}

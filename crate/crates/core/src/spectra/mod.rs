//! Exact spectra, the published spectrum formulas, join spectra, the Γ
//! spectrum via the class quotient and the eigenvalue bounds.

mod algebraic;
mod closed_form;
mod corollary;
mod exact;
mod join;
mod multiset;
mod weyl;

pub use algebraic::AlgebraicEigenvalue;
pub use closed_form::{closed_form, closed_form_variant, quadratic_hints, ClosedFormGraph, FormulaVariant};
pub use corollary::{
    check_fixed_part, fixed_part, gamma_char_poly, gamma_spectrum_via_join, gamma_spectrum_via_join_with, t_matrix,
    t_plus_a, variant_matrix, CorollaryPrediction, CorollaryVariant, FixedPartCheck, TReading,
};
pub use exact::{spectrum_exact, spectrum_exact_matrix, spectrum_exact_with_hints, ExactSpectrum};
pub use join::{
    join_adjacency_spectrum, join_laplacian_spectrum, join_laplacian_spectrum_with, JoinInput, JoinPart,
    JoinSpectrum, LaplacianSign,
};
pub use multiset::SpectrumMultiset;
pub use weyl::{
    bounds_table, verify_bounds, verify_bounds_with, weyl_interval, weyl_interval_f64, BoundCheck, BoundsReport,
    EigenBound, BOUND_SLACK,
};

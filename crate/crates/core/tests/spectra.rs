mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use zerodiv::spectra::{
    closed_form, closed_form_variant, quadratic_hints, spectrum_exact, spectrum_exact_with_hints, weyl_interval_f64,
    ClosedFormGraph, FormulaVariant,
};
use zerodiv::{build_h, build_subgraph, AlgebraicEigenvalue, Error, LoopPolicy, SpectrumMultiset, Subgraph};

fn graph_matrix(q: u32, which: ClosedFormGraph) -> (usize, zerodiv::IntMatrix, usize) {
    let f = gf(q);
    let g = match which {
        ClosedFormGraph::H => build_h(&f, LoopPolicy::LoopsAllowed),
        ClosedFormGraph::Sub(s) => build_subgraph(&f, s).unwrap(),
    };
    (g.order(), g.adjacency_matrix(), g.loop_count())
}

/// Numeric eigenvalues from an independent solver must match the exact
/// multiset, and every rational multiplicity must survive elimination.
fn check_against_oracles(a: &zerodiv::IntMatrix, s: &SpectrumMultiset) {
    assert!(max_gap(&s.to_f64_desc(), &int_eigenvalues_desc(a)) < 1e-8);
    for (v, m) in s.entries() {
        if let Some(k) = v.as_integer() {
            assert_eq!(eigen_multiplicity(a, k.try_into().unwrap()), *m, "eigenvalue {v}");
        }
    }
}

#[test]
fn corrected_forms_match_exact_spectra() {
    for q in [3u32, 4, 5, 7, 8, 9] {
        let n = q - 1;
        for which in ClosedFormGraph::ALL {
            if n < which.min_n() {
                continue;
            }
            let (order, a, _) = graph_matrix(q, which);
            let want = closed_form_variant(which, n, FormulaVariant::Corrected).unwrap();
            assert_eq!(want.total(), order, "{which} n={n}");
            let got = spectrum_exact(&match which {
                ClosedFormGraph::H => build_h(&gf(q), LoopPolicy::LoopsAllowed),
                ClosedFormGraph::Sub(s) => build_subgraph(&gf(q), s).unwrap(),
            })
            .unwrap();
            assert_eq!(got.spectrum, want, "{which} n={n}");
            check_against_oracles(&a, &got.spectrum);
        }
    }
}

#[test]
fn printed_h4_and_h_hold() {
    for q in [4u32, 5, 7, 8, 9] {
        for which in [ClosedFormGraph::Sub(Subgraph::H4), ClosedFormGraph::H] {
            let (_, a, _) = graph_matrix(q, which);
            let got = zerodiv::spectra::spectrum_exact_matrix(&a, &quadratic_hints(which, q - 1), 1).unwrap();
            assert_eq!(got.spectrum, closed_form(which, q - 1).unwrap());
        }
    }
}

#[test]
fn printed_h1_totals_do_not_match_order() {
    for n in 2..10u32 {
        let printed = closed_form(ClosedFormGraph::Sub(Subgraph::H1), n).unwrap();
        assert_eq!(printed.total(), 4 * n as usize + 4);
        assert_ne!(printed.total(), Subgraph::H1.order(n as usize));
    }
}

#[test]
fn traces_equal_loop_counts() {
    for q in [3u32, 4, 5] {
        for which in ClosedFormGraph::ALL {
            if q - 1 < which.min_n() {
                continue;
            }
            let (_, _, loops) = graph_matrix(q, which);
            let s = closed_form_variant(which, q - 1, FormulaVariant::Corrected).unwrap();
            assert_eq!(s.trace(), Some(BigRational::from_integer(loops.into())), "{which} q={q}");
        }
    }
}

#[test]
fn h1_is_bipartite_and_h2_is_not() {
    let f = gf(5);
    let h1 = build_subgraph(&f, Subgraph::H1).unwrap();
    let h2 = build_subgraph(&f, Subgraph::H2).unwrap();
    assert!(h1.is_bipartite());
    assert!(spectrum_exact(&h1).unwrap().spectrum.is_symmetric_about_zero());
    assert!(!h2.is_bipartite());
    assert!(!spectrum_exact(&h2).unwrap().spectrum.is_symmetric_about_zero());
}

#[test]
fn h2_surd_pair_at_four() {
    // n = 4: roots of x^2 - 8x - 1, i.e. 4 ± sqrt(17)
    let (_, a, _) = graph_matrix(5, ClosedFormGraph::Sub(Subgraph::H2));
    let s = spectrum_exact_with_hints(&build_subgraph(&gf(5), Subgraph::H2).unwrap(), &[]).unwrap();
    let hi = AlgebraicEigenvalue::surd(BigInt::from(4), BigInt::from(1), BigInt::from(17), BigInt::from(1));
    assert_eq!(s.spectrum.multiplicity_of(&hi), 1);
    assert_eq!(s.spectrum.multiplicity_of(&hi.conjugate()), 1);
    check_against_oracles(&a, &s.spectrum);
}

#[test]
fn domains() {
    assert!(matches!(
        closed_form(ClosedFormGraph::Sub(Subgraph::H4), 2),
        Err(Error::OutOfDomain { n: 2, .. })
    ));
    assert!(closed_form(ClosedFormGraph::H, 1).is_err());
}

#[test]
fn algebraic_display_and_order() {
    let [hi, lo] = AlgebraicEigenvalue::quadratic_roots(&BigInt::from(3), &BigInt::from(-8));
    assert_eq!(hi.to_string(), "(3 + sqrt(41))/2");
    assert_eq!(lo.to_string(), "(3 - sqrt(41))/2");
    assert!(hi > AlgebraicEigenvalue::integer(4) && hi < AlgebraicEigenvalue::integer(5));
    assert!((hi.to_f64() - (3.0 + 41f64.sqrt()) / 2.0).abs() < 1e-12);
    let r = AlgebraicEigenvalue::surd(BigInt::from(2), BigInt::from(3), BigInt::from(4), BigInt::from(2));
    assert_eq!(r, AlgebraicEigenvalue::integer(4));
}

#[test]
fn weyl_interval_brute_force() {
    // all index pairs j + k = i + 1 and l + h = i + d
    let a = [5.0, 2.0, 0.5, -1.0, -4.0];
    let b = [3.0, 1.0, 0.0, -0.5, -2.0];
    let d = a.len();
    for i in 1..=d {
        let mut upper = f64::INFINITY;
        let mut lower = f64::NEG_INFINITY;
        for j in 1..=d {
            for k in 1..=d {
                if j + k == i + 1 {
                    upper = upper.min(a[j - 1] + b[k - 1]);
                }
                if j + k == i + d {
                    lower = lower.max(a[j - 1] + b[k - 1]);
                }
            }
        }
        assert_eq!(weyl_interval_f64(&a, &b, i).unwrap(), (lower, upper), "i={i}");
    }
}

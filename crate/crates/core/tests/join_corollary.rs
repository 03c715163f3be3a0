mod common;

use common::*;
use zerodiv::graph::{complete, cycle, null};
use zerodiv::spectra::{
    check_fixed_part, fixed_part, gamma_char_poly, gamma_spectrum_via_join, join_adjacency_spectrum,
    join_laplacian_spectrum, join_laplacian_spectrum_with, variant_matrix, verify_bounds_with, CorollaryVariant,
    JoinInput, LaplacianSign, TReading,
};
use zerodiv::verify::random_weyl_trials;
use zerodiv::{all_classes, build_gamma, build_h, class_induced_graph, generalized_join, Error, LoopPolicy};

#[test]
fn join_spectra_on_class_family() {
    let f = gf(3);
    let family: Vec<_> = all_classes(&f).unwrap().iter().map(class_induced_graph).collect();
    let k = build_h(&f, LoopPolicy::Simple);
    let input = JoinInput::from_graphs(&k, &family).unwrap();
    let joined = generalized_join(&k, &family).unwrap();
    let adj = int_eigenvalues_desc(&joined.adjacency_matrix());
    let lap = int_eigenvalues_desc(&joined.laplacian_matrix());
    assert!(max_gap(&join_adjacency_spectrum(&input).unwrap().values, &adj) < 1e-8);
    assert!(max_gap(&join_laplacian_spectrum(&input).unwrap().values, &lap) < 1e-8);
}

#[test]
fn plus_sign_only_fits_bipartite_k() {
    // K = K2 is bipartite; K3 is not
    let bip = JoinInput::from_graphs(&complete(2), &[null(2), complete(3)]).unwrap();
    let odd = JoinInput::from_graphs(&complete(3), &[null(2), complete(1), cycle(4)]).unwrap();
    for (input, same) in [(bip, true), (odd, false)] {
        let minus = join_laplacian_spectrum_with(&input, LaplacianSign::Minus).unwrap().values;
        let plus = join_laplacian_spectrum_with(&input, LaplacianSign::Plus).unwrap().values;
        assert_eq!(max_gap(&minus, &plus) < 1e-9, same);
    }
}

#[test]
fn join_input_validation() {
    let mut irregular = null(3);
    irregular.set_edge(0, 1, true);
    assert!(matches!(
        JoinInput::from_graphs(&complete(2), &[null(1), irregular]),
        Err(Error::NotRegular { index: 1 })
    ));
    assert!(matches!(
        JoinInput::from_graphs(&complete(2), &[null(1)]),
        Err(Error::SizeMismatch { expected: 2, found: 1 })
    ));
}

#[test]
fn quotient_variant_reproduces_gamma() {
    for q in [2, 3, 4] {
        let f = gf(q);
        let p = gamma_spectrum_via_join(&f, CorollaryVariant::Quotient).unwrap();
        assert_eq!(p.poly, gamma_char_poly(&f).unwrap(), "q={q}");
    }
    // numerically at a size where exact polynomials get slow
    let f = gf(7);
    let p = gamma_spectrum_via_join(&f, CorollaryVariant::Quotient).unwrap();
    let want = int_eigenvalues_desc(&build_gamma(&f).unwrap().adjacency_matrix());
    assert!(max_gap(&p.numeric_values().unwrap(), &want) < 1e-8);
}

#[test]
fn published_variants_miss_gamma() {
    for q in [3, 4] {
        let f = gf(q);
        let gamma = gamma_char_poly(&f).unwrap();
        for v in [CorollaryVariant::Statement, CorollaryVariant::Proof] {
            assert_ne!(gamma_spectrum_via_join(&f, v).unwrap().poly, gamma, "{v:?} q={q}");
        }
    }
}

#[test]
fn fixed_part_by_elimination() {
    for q in [3, 4, 5] {
        let f = gf(q);
        let n = f.n();
        let check = check_fixed_part(&f).unwrap();
        assert!(check.pass(), "{check:?}");
        let a = build_gamma(&f).unwrap().adjacency_matrix();
        let quot = variant_matrix(&f, CorollaryVariant::Quotient, TReading::AllNilpotent);
        let (z, m) = fixed_part(n);
        assert_eq!(eigen_multiplicity(&a, 0) - eigen_multiplicity(&quot, 0), z);
        assert_eq!(eigen_multiplicity(&a, -1) - eigen_multiplicity(&quot, -1), m);
    }
}

#[test]
fn bounds_depend_on_t_reading() {
    let f = gf(4);
    assert!(verify_bounds_with(&f, TReading::NkOnly).unwrap().pass());
    let all = verify_bounds_with(&f, TReading::AllNilpotent).unwrap();
    let failing: Vec<usize> = all.items.iter().filter(|c| !c.pass).map(|c| c.bound.item).collect();
    assert_eq!(failing, vec![3, 8]);
}

#[test]
fn weyl_inequality_holds_on_random_matrices() {
    assert_eq!(random_weyl_trials(11, 200).unwrap(), 0);
}

mod common;

use common::strategies::{admissible, atypical, ell, n, simple, typical};
use gl11_core::labels::{epsilon, epsilon2};
use gl11_core::oracle::realize;
use gl11_core::symbolic::rational::{half, int};
use gl11_core::text::{parse_module_label, render};
use gl11_core::{LabelKind, ModuleLabel};
use num_traits::Signed;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn contragredient_is_an_involution_preserving_delta(s in simple()) {
        let c = s.contragredient().unwrap();
        prop_assert_eq!(c.delta(), s.delta());
        prop_assert_eq!(c.contragredient().unwrap(), s);
    }

    #[test]
    fn contragredient_of_vacuum_projective(n in n()) {
        let p = ModuleLabel::projective(n.clone(), 0);
        prop_assert_eq!(p.contragredient().unwrap(), ModuleLabel::projective(-n, 0));
    }

    #[test]
    fn composition_lengths(s in admissible(), flip in any::<bool>()) {
        let s = s.with_parity(flip);
        let expected = if s.is_projective() { 4 } else { 1 };
        let k = s.k_decompose();
        prop_assert_eq!(k.total_multiplicity(), expected);
        prop_assert!(k.labels().all(|l| l.is_simple() && l.parity_flip == flip));
        prop_assert_eq!(k.k_decompose(), k);
    }

    #[test]
    fn projective_factors_sit_around_the_head(n in n(), l in ell()) {
        let k = ModuleLabel::projective(n.clone(), l).k_decompose();
        prop_assert_eq!(k.multiplicity(&ModuleLabel::atypical(n.clone(), l)), 2);
        prop_assert_eq!(k.multiplicity(&ModuleLabel::atypical(&n + int(1), l)), 1);
        prop_assert_eq!(k.multiplicity(&ModuleLabel::atypical(n - int(1), l)), 1);
    }

    #[test]
    fn reducible_verma_has_two_factors(n in n(), l in ell()) {
        let k = ModuleLabel::verma0(n, l).k_decompose();
        prop_assert_eq!(k.total_multiplicity(), 2);
        prop_assert_eq!(k.len(), 2);
    }

    #[test]
    fn epsilon_pair_is_symmetric_and_small(a in -6i64..=6, b in -6i64..=6) {
        prop_assert_eq!(epsilon2(a, b), epsilon2(b, a));
        prop_assert_eq!(epsilon2(a, 0), int(0));
        prop_assert!(epsilon2(a, b).abs() <= half());
        prop_assert_eq!(epsilon(a) + epsilon(-a), int(0));
    }

    #[test]
    fn spectral_flow_round_trip(n in n(), l in -4i64..=4) {
        let v = ModuleLabel::verma0(n, 0);
        let there = v.spectral_flow(l).unwrap();
        prop_assert_eq!(there.ell(), Some(l));
        prop_assert_eq!(there.spectral_flow(-l).unwrap(), v);
    }

    #[test]
    fn spectral_flow_of_vacuum_type_modules(n in n(), l in -4i64..=-1) {
        let a = ModuleLabel::atypical(n.clone(), 0).spectral_flow(l).unwrap();
        prop_assert_eq!(a, ModuleLabel::atypical(&n - int(l) - half(), l));
        let p = ModuleLabel::projective(n.clone(), 0).spectral_flow(l).unwrap();
        prop_assert_eq!(p, ModuleLabel::projective(n - int(l) - half(), l));
    }

    #[test]
    fn spectral_flow_of_typicals_is_undetermined(s in typical(), l in 1i64..=3) {
        prop_assert!(s.spectral_flow(l).is_err());
        prop_assert_eq!(s.spectral_flow(0).unwrap(), s);
    }

    #[test]
    fn top_space_dimension(s in admissible()) {
        prop_assert_eq!(realize(&s.top_space()).dim(), s.top_dim());
    }

    #[test]
    fn render_then_parse(s in admissible(), flip in any::<bool>()) {
        let s = s.with_parity(flip);
        prop_assert_eq!(parse_module_label(&render(&s)).unwrap(), s);
    }

    #[test]
    fn projective_cover_of_atypical(a in atypical()) {
        let p = a.projective_cover().unwrap();
        prop_assert!(p.is_projective());
        prop_assert_eq!(p.k_decompose().multiplicity(&a), 2);
    }
}

#[test]
fn conformal_weights() {
    let v = ModuleLabel::typical(int(1), half()).unwrap();
    assert_eq!(v.delta(), half() * (int(1) + half() / int(2)));
    assert_eq!(ModuleLabel::unit().delta(), int(0));
    assert_eq!(ModuleLabel::projective(int(0), 0).delta(), int(0));
    let p = ModuleLabel::projective(int(1), 2);
    assert_eq!(p.delta(), int(2) * (int(1) + int(1)) - int(2));
    assert!(ModuleLabel::typical(int(0), int(1)).is_err());
    assert!(matches!(ModuleLabel::unit().kind, LabelKind::AtypicalA { ell: 0, .. }));
}

#[test]
fn malformed_labels_are_rejected() {
    for text in ["", "V(1)", "A(1/2;x)", "Q(0;0)", "P(1/0;0)", "V(1;2"] {
        assert!(parse_module_label(text).is_err(), "{text}");
    }
}

mod common;

use common::strategies::{atypical, n, simple, typical};
use gl11_core::extensions::{
    closed_form_local, equivalence_shift, induce, induced_character, induced_equivalent, induced_projective_cover,
    is_local, monodromy_exponent, weight_growth, ExtensionSpec, GrowthClass,
};
use gl11_core::fusion::fuse;
use gl11_core::symbolic::rational::{int, is_integer, rat};
use gl11_core::{FormalSum, ModuleLabel};
use proptest::prelude::*;

fn extension() -> impl Strategy<Value = ExtensionSpec> {
    prop_oneof![
        Just(ExtensionSpec::sl21_minus_half()),
        Just(ExtensionSpec::sl21_level1()),
        (-2i64..=2, prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)])
            .prop_map(|(n, l)| ExtensionSpec::custom(int(n), l).unwrap()),
    ]
}

#[test]
fn generator_powers_form_a_group() {
    for ext in [ExtensionSpec::sl21_minus_half(), ExtensionSpec::sl21_level1(), ExtensionSpec::custom(int(1), 3).unwrap()] {
        assert_eq!(ext.generator_of(0), ModuleLabel::unit());
        assert_eq!(ext.generator_of(1), ext.generator());
        for m in -5i64..=5 {
            for m2 in -5i64..=5 {
                let product = fuse(&ext.generator_of(m), &ext.generator_of(m2)).unwrap();
                assert_eq!(product, FormalSum::single(ext.generator_of(m + m2)), "{} m={m} m'={m2}", ext.name());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn monodromy_is_additive_modulo_integers(s in simple(), ext in extension(), m in -4i64..=4, m2 in -4i64..=4) {
        let e = |k: i64| monodromy_exponent(&s, &ext.generator_of(k)).unwrap();
        prop_assert!(is_integer(&(e(m + m2) - e(m) - e(m2))));
        prop_assert_eq!(e(0), int(0));
    }

    #[test]
    fn locality_matches_closed_forms(s in simple()) {
        for ext in [ExtensionSpec::sl21_minus_half(), ExtensionSpec::sl21_level1()] {
            prop_assert_eq!(Some(is_local(&s, &ext).unwrap()), closed_form_local(&s, &ext));
        }
    }

    #[test]
    fn induced_summands_are_distinct(s in simple(), ext in extension()) {
        let summands = induce(&s, &ext, 5).unwrap();
        prop_assert_eq!(summands.len(), 11);
        let mut labels: Vec<_> = summands.iter().map(|(_, l)| l.clone()).collect();
        labels.sort();
        labels.dedup();
        prop_assert_eq!(labels.len(), 11);
        prop_assert_eq!(&summands[5].1, &s);
    }

    #[test]
    fn induced_equivalence_is_an_equivalence(s in simple(), ext in extension(), a in -3i64..=3, b in -3i64..=3) {
        let summands = induce(&s, &ext, 6).unwrap();
        let at = |m: i64| summands.iter().find(|(k, _)| *k == m).unwrap().1.clone();
        let (x, y) = (at(a), at(b));
        prop_assert!(induced_equivalent(&s, &s, &ext).unwrap());
        prop_assert_eq!(equivalence_shift(&s, &x, &ext).unwrap(), Some(a));
        prop_assert!(induced_equivalent(&x, &s, &ext).unwrap());
        prop_assert_eq!(equivalence_shift(&x, &y, &ext).unwrap(), Some(b - a));
    }

    #[test]
    fn distinct_orbits_are_inequivalent(n in n(), e in (1i64..=3).prop_map(|p| rat(p, 5))) {
        let ext = ExtensionSpec::sl21_minus_half();
        let s = ModuleLabel::typical(n.clone(), e.clone()).unwrap();
        let t = ModuleLabel::typical(n, e + rat(1, 7)).unwrap();
        prop_assert!(!induced_equivalent(&s, &t, &ext).unwrap());
    }

    #[test]
    fn weight_growth_agrees_with_direct_fusion(s in simple(), ext in extension()) {
        let g = weight_growth(&s, &ext).unwrap();
        let start = s.ell().map_or(0, i64::abs) + 2;
        for dir in [1i64, -1] {
            let slope = if dir == 1 { &g.linear_coeff } else { &g.linear_coeff_negative };
            let delta = |m: i64| fuse(&s, &ext.generator_of(m)).unwrap().as_single().unwrap().delta();
            let ms: Vec<i64> = (start..start + 6).map(|m| dir * m).collect();
            let c = delta(ms[0]) - &g.quadratic_coeff * int(ms[0] * ms[0]) - slope * int(ms[0]);
            for &m in &ms[1..] {
                prop_assert_eq!(delta(m), &g.quadratic_coeff * int(m * m) + slope * int(m) + &c);
            }
        }
    }

    #[test]
    fn induced_cover_contains_projectives(a in atypical()) {
        let ext = ExtensionSpec::sl21_level1();
        match induced_projective_cover(&a, &ext, 2) {
            Ok(parts) => {
                prop_assert!(is_local(&a, &ext).unwrap());
                prop_assert!(parts.iter().all(|(_, l)| l.is_projective()));
            }
            Err(_) => prop_assert!(!is_local(&a, &ext).unwrap()),
        }
    }

    #[test]
    fn typical_summands_carry_the_induced_character(s in typical()) {
        let (n, e) = (s.n().clone(), s.ehat());
        let ch = induced_character(&n, &e, 3, &int(2)).unwrap();
        prop_assert!(!ch.is_empty());
    }
}

#[test]
fn growth_classes_of_the_two_extensions() {
    let v = ModuleLabel::typical(int(0), rat(1, 3)).unwrap();
    let lo = weight_growth(&v, &ExtensionSpec::sl21_minus_half()).unwrap();
    // Δ(m) = (ê - 2m)(n + ê/2): linear, with slope -2(n + ê/2) in both directions
    assert_eq!(lo.quadratic_coeff, int(0));
    assert_eq!(lo.linear_coeff, rat(-1, 3));
    assert_eq!(lo.linear_coeff_negative, rat(-1, 3));
    assert_eq!(lo.classification, GrowthClass::SpectralFlowUnbounded);
    // Δ(m) = (ê + m)(n + (ê + m)/2)
    let hi = weight_growth(&v, &ExtensionSpec::sl21_level1()).unwrap();
    assert_eq!(hi.quadratic_coeff, rat(1, 2));
    assert_eq!(hi.linear_coeff, rat(1, 3));
    assert_eq!(hi.classification, GrowthClass::LowestWeight);
    assert!(weight_growth(&ModuleLabel::projective(int(0), 0), &ExtensionSpec::sl21_level1()).is_err());
}

#[test]
fn custom_extension_names() {
    assert_eq!(ExtensionSpec::sl21_minus_half().name(), "sl21-neg-half");
    assert_eq!(ExtensionSpec::sl21_level1().name(), "sl21-level1");
    assert_eq!(ExtensionSpec::custom(int(2), 1).unwrap().name(), "custom");
    assert!(induce(&ModuleLabel::verma0(int(0), 1), &ExtensionSpec::sl21_level1(), 1).is_err());
    assert!(induce(&ModuleLabel::unit(), &ExtensionSpec::sl21_level1(), -1).is_err());
}

mod common;

use std::collections::BTreeMap;

use common::strategies::{ehat, n};
use gl11_core::characters::{char_atypical0, char_verma, character, atypical0_window, verma_product};
use gl11_core::labels::delta_of;
use gl11_core::symbolic::rational::{half, int};
use gl11_core::{ModuleLabel, Rational};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

/// Number of partitions of every `m ≤ max` (all parts ≥ 1), listed explicitly.
fn partitions(max: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(rest: usize, largest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=largest.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    (0..=max)
        .map(|m| {
            let mut out = Vec::new();
            go(m, m, &mut Vec::new(), &mut out);
            out
        })
        .collect()
}

/// State counts `(level, charge) -> multiplicity` for the free module generated
/// by two bosons with modes `≥ 1`, a charge `+1` fermion with modes `≥ 1` and a
/// charge `-1` fermion with modes `≥ 0`, enumerated state by state.
fn enumerate_states(max_level: usize) -> BTreeMap<(usize, i64), u64> {
    let parts = partitions(max_level);
    let mut bosons = vec![0u64; max_level + 1];
    for (a, pa) in parts.iter().enumerate() {
        for (b, pb) in parts.iter().enumerate() {
            if a + b <= max_level {
                bosons[a + b] += (pa.len() * pb.len()) as u64;
            }
        }
    }
    let subsets = |lowest: usize| -> Vec<(usize, i64)> {
        let modes: Vec<usize> = (lowest..=max_level).collect();
        (0u32..1 << modes.len())
            .map(|mask| {
                let chosen: Vec<usize> =
                    modes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &m)| m).collect();
                (chosen.iter().sum(), chosen.len() as i64)
            })
            .filter(|&(level, _)| level <= max_level)
            .collect()
    };
    let (plus, minus) = (subsets(1), subsets(0));
    let mut out = BTreeMap::new();
    for &(lp, cp) in &plus {
        for &(lm, cm) in &minus {
            for (lb, &count) in bosons.iter().enumerate() {
                let level = lp + lm + lb;
                if level <= max_level && count > 0 {
                    *out.entry((level, cp - cm)).or_insert(0) += count;
                }
            }
        }
    }
    out
}

#[test]
fn verma_product_matches_state_enumeration() {
    let k = 6;
    let states = enumerate_states(k);
    let product = verma_product(&int(k as i64)).unwrap();
    let mut seen = 0;
    for (&(level, charge), &count) in &states {
        let c = product.coeff(&int(level as i64), &int(charge), &int(0));
        assert_eq!(c, BigInt::from(count), "q^{level} z^{charge}");
        seen += 1;
    }
    assert_eq!(product.len(), seen);
}

#[test]
fn first_levels_of_the_verma_character() {
    let states = enumerate_states(1);
    let level1: Vec<u64> = (-2..=1).rev().map(|c| states[&(1, c)]).collect();
    assert_eq!(level1, vec![1, 3, 3, 1]);
    assert_eq!(states[&(0, 0)], 1);
    assert_eq!(states[&(0, -1)], 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verma_character_is_a_shifted_product(n in n(), e in ehat()) {
        let k = int(3);
        let ch = char_verma(&n, &e, &k).unwrap();
        let expected = verma_product(&k).unwrap().shift(&delta_of(&n, &e), &n, &e);
        prop_assert!(gl11_core::symbolic::JacobiSeries::equal_to_cutoff(&ch, &expected, &k).unwrap());
    }

    #[test]
    fn lowest_slice_has_two_states(n in n(), e in ehat()) {
        let ch = char_verma(&n, &e, &int(2)).unwrap();
        let delta = delta_of(&n, &e);
        let total: BigInt = ch.q_slice(&delta).map(|(_, c)| c.clone()).sum();
        prop_assert_eq!(total, BigInt::from(2));
        prop_assert_eq!(ch.min_q(), Some(&delta));
    }

    #[test]
    fn verma_coefficients_are_positive(n in n(), e in ehat()) {
        let ch = char_verma(&n, &e, &int(3)).unwrap();
        prop_assert!(ch.terms().all(|(_, c)| c.is_positive()));
    }

    #[test]
    fn atypical_characters_are_nonnegative(n in n()) {
        let k = int(3);
        let (lo, hi) = atypical0_window(&n, &k);
        let ch = char_atypical0(&n, &k, &lo, &hi).unwrap();
        prop_assert!(ch.terms().all(|(_, c)| !c.is_negative()));
        let top: BigInt = ch.q_slice(&int(0)).map(|(_, c)| c.clone()).sum();
        prop_assert_eq!(top, BigInt::from(1));
    }

    #[test]
    fn reducible_verma_splits_into_atypicals(n in n()) {
        let k = int(2);
        let (lo, hi) = (&n - &k - int(1), &n + &k);
        let v = character(&ModuleLabel::verma0(n.clone(), 0), &k, None).unwrap();
        let a = char_atypical0(&(&n - half()), &k, &lo, &hi).unwrap();
        let b = char_atypical0(&(&n + half()), &k, &lo, &hi).unwrap();
        prop_assert!(gl11_core::symbolic::JacobiSeries::equal_to_cutoff(&v, &a.add(&b), &k).unwrap());
    }
}

#[test]
fn no_formula_for_projectives() {
    let p = ModuleLabel::projective(Rational::from_integer(0.into()), 1);
    assert!(character(&p, &int(2), None).is_err());
    assert!(verma_product(&int(-1)).is_err());
}

#![allow(dead_code)]

use gl11_core::symbolic::rational::{int, rat};
use gl11_core::{ModuleLabel, Rational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 6`, `1 ≤ q ≤ 4`.
pub fn small_n(r: &mut impl Rng) -> Rational {
    rat(r.gen_range(-6..=6), r.gen_range(1..=4))
}

/// Non-integer `p/q` with `q ∈ {2, 3, 4}`, `|p| ≤ 8`.
pub fn typical_ehat(r: &mut impl Rng) -> Rational {
    loop {
        let e = rat(r.gen_range(-8..=8), r.gen_range(2..=4));
        if !e.is_integer() {
            return e;
        }
    }
}

pub fn small_ell(r: &mut impl Rng) -> i64 {
    r.gen_range(-3..=3)
}

pub fn typical(r: &mut impl Rng) -> ModuleLabel {
    ModuleLabel::typical(small_n(r), typical_ehat(r)).unwrap()
}

pub fn atypical(r: &mut impl Rng) -> ModuleLabel {
    ModuleLabel::atypical(small_n(r), small_ell(r))
}

pub fn projective(r: &mut impl Rng) -> ModuleLabel {
    ModuleLabel::projective(small_n(r), small_ell(r))
}

pub fn simple(r: &mut impl Rng) -> ModuleLabel {
    if r.gen_bool(0.5) {
        typical(r)
    } else {
        atypical(r)
    }
}

/// Typical, atypical or projective.
pub fn admissible(r: &mut impl Rng) -> ModuleLabel {
    match r.gen_range(0..3) {
        0 => typical(r),
        1 => atypical(r),
        _ => projective(r),
    }
}

pub fn zero() -> Rational {
    int(0)
}

pub mod strategies {
    use gl11_core::symbolic::rational::rat;
    use gl11_core::{ModuleLabel, Rational};
    use proptest::prelude::*;

    pub fn n() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    pub fn ehat() -> impl Strategy<Value = Rational> {
        (-8i64..=8, 2i64..=4)
            .prop_filter("non-integer", |(p, q)| p % q != 0)
            .prop_map(|(p, q)| rat(p, q))
    }

    pub fn ell() -> impl Strategy<Value = i64> {
        -3i64..=3
    }

    pub fn typical() -> impl Strategy<Value = ModuleLabel> {
        (n(), ehat()).prop_map(|(n, e)| ModuleLabel::typical(n, e).unwrap())
    }

    pub fn atypical() -> impl Strategy<Value = ModuleLabel> {
        (n(), ell()).prop_map(|(n, l)| ModuleLabel::atypical(n, l))
    }

    pub fn projective() -> impl Strategy<Value = ModuleLabel> {
        (n(), ell()).prop_map(|(n, l)| ModuleLabel::projective(n, l))
    }

    pub fn simple() -> impl Strategy<Value = ModuleLabel> {
        prop_oneof![typical(), atypical()]
    }

    pub fn admissible() -> impl Strategy<Value = ModuleLabel> {
        prop_oneof![typical(), atypical(), projective()]
    }
}

use gl11_core::symbolic::rational::{int, rat};
use gl11_core::symbolic::{Field, JacobiSeries, MPoly, ParamField, RatFun, RationalFunction, UPoly};
use gl11_core::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

type Q = RatFun<Rational>;

fn poly(c: &[i64]) -> UPoly<Rational> {
    UPoly::from_coeffs(c.iter().map(|&v| int(v)).collect())
}

fn q(num: &[i64], den: &[i64]) -> Q {
    Q::new(poly(num), poly(den)).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

/// `c₀ + c₁Δ + c₂x + c₃Δx` over `d₀ + d₁Δ + d₂x`.
fn param() -> impl Strategy<Value = ParamField> {
    (prop::array::uniform4(-3i64..=3), prop::array::uniform3(-2i64..=2)).prop_filter_map(
        "nonzero denominator",
        |(n, d)| {
            let (dl, x) = (ParamField::delta(), ParamField::x());
            let c = ParamField::from_i64;
            let num = c(n[0]).add(&c(n[1]).mul(&dl)).add(&c(n[2]).mul(&x)).add(&c(n[3]).mul(&dl).mul(&x));
            let den = c(d[0]).add(&c(d[1]).mul(&dl)).add(&c(d[2]).mul(&x));
            num.div(&den)
        },
    )
}

fn small_ratfun() -> impl Strategy<Value = Q> {
    (prop::collection::vec(-4i64..=4, 1..4), prop::collection::vec(-4i64..=4, 1..4))
        .prop_filter_map("nonzero denominator", |(n, d)| Q::new(poly(&n), poly(&d)).ok())
}

fn param_ratfun() -> impl Strategy<Value = RationalFunction> {
    (param(), param(), param(), 0i64..=1).prop_filter_map("nonzero denominator", |(a, b, c, k)| {
        let num = UPoly::from_coeffs(vec![a, b]);
        let den = UPoly::from_coeffs(vec![c, ParamField::from_i64(k)]);
        RationalFunction::new(num, den).ok()
    })
}

fn jacobi() -> impl Strategy<Value = JacobiSeries> {
    prop::collection::vec(((0i64..=4, 1i64..=2), -2i64..=2, -3i64..=3), 0..6).prop_map(|terms| {
        JacobiSeries::from_terms(
            terms
                .into_iter()
                .map(|((qn, qd), z, c)| ((rat(qn, qd), int(z), int(0)), BigInt::from(c))),
            int(0),
            Some(int(3)),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(Field::add(&Field::add(&a, &b), &c), Field::add(&a, &Field::add(&b, &c)));
        prop_assert_eq!(Field::mul(&a, &Field::add(&b, &c)), Field::add(&Field::mul(&a, &b), &Field::mul(&a, &c)));
        if let Some(inv) = Field::inv(&a) {
            prop_assert!(Field::is_one(&Field::mul(&a, &inv)));
        } else {
            prop_assert!(Field::is_zero(&a));
        }
    }

    #[test]
    fn param_field_axioms(a in param(), b in param(), c in param()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        match a.inv() {
            Some(inv) => prop_assert!(a.mul(&inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn leibniz_rule(f in small_ratfun(), g in small_ratfun()) {
        let lhs = f.mul(&g).differentiate();
        let rhs = f.differentiate().mul(&g).add(&f.mul(&g.differentiate()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ratfun_division_inverts_multiplication(f in small_ratfun(), g in small_ratfun()) {
        if !g.is_zero() {
            prop_assert_eq!(f.mul(&g).div(&g).unwrap(), f);
        }
    }

    #[test]
    fn jacobi_product_laws(a in jacobi(), b in jacobi(), c in jacobi()) {
        let w = int(3);
        prop_assert!(JacobiSeries::equal_to_cutoff(&a.mul(&b), &b.mul(&a), &w).unwrap());
        prop_assert!(JacobiSeries::equal_to_cutoff(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)), &w).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn leibniz_rule_parametric(f in param_ratfun(), g in param_ratfun()) {
        let lhs = f.mul(&g).differentiate();
        let rhs = f.differentiate().mul(&g).add(&f.mul(&g.differentiate()));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn ratfun_examples() {
    let diff = q(&[1], &[1, -1]).sub(&q(&[1], &[0, 1]));
    assert_eq!(diff, q(&[-1, 2], &[0, 1, -1]));
    assert_eq!(q(&[1], &[0, 1]).differentiate(), q(&[-1], &[0, 0, 1]));
    assert_eq!(q(&[-1, 0, 1], &[-1, 1]), Q::from_poly(poly(&[1, 1])));
    assert!(q(&[1], &[1]).div(&Q::zero()).is_err());
}

fn series(terms: &[(i64, i64)], cutoff: i64) -> JacobiSeries {
    JacobiSeries::from_terms(
        terms.iter().map(|&(qe, c)| ((int(qe), int(0), int(0)), BigInt::from(c))),
        int(0),
        Some(int(cutoff)),
    )
    .unwrap()
}

#[test]
fn jacobi_examples() {
    let p = series(&[(0, 1), (1, 1)], 1).mul(&series(&[(0, 1), (1, -1)], 1));
    assert!(JacobiSeries::equal_to_cutoff(&p, &series(&[(0, 1)], 1), &int(1)).unwrap());
    assert_eq!(p.len(), 1);

    let half = rat(1, 2);
    let a = JacobiSeries::monomial(half.clone(), int(1), int(0), BigInt::from(1));
    let b = JacobiSeries::monomial(half, int(-1), int(0), BigInt::from(1));
    let ab = a.mul(&b);
    assert_eq!(ab.coeff(&int(1), &int(0), &int(0)), BigInt::from(1));
    assert_eq!(ab.len(), 1);

    let empty = series(&[], 2);
    assert!(series(&[(0, 3), (2, 1)], 2).mul(&empty).is_empty());

    let x = series(&[(0, 1), (1, 1)], 3);
    assert!(JacobiSeries::equal_to_cutoff(&x, &x, &int(3)).unwrap());
    assert!(!JacobiSeries::equal_to_cutoff(&x, &series(&[(0, 1), (1, 2)], 3), &int(1)).unwrap());
    assert!(JacobiSeries::equal_to_cutoff(&x, &series(&[(0, 1), (1, 1), (3, 5)], 3), &int(2)).unwrap());
    assert!(JacobiSeries::equal_to_cutoff(&x, &series(&[(0, 1)], 1), &int(2)).is_err());
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::array::uniform3(0u32..=2), -3i64..=3), 1..5).prop_map(|terms| {
        terms.into_iter().fold(MPoly::zero(3), |acc, (e, c)| acc.add(&MPoly::monomial(3, e.to_vec(), int(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mpoly_gcd_contains_common_factor(f in mpoly(), g in mpoly(), h in mpoly()) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let (a, b) = (f.mul(&g), f.mul(&h));
        let d = MPoly::gcd(&a, &b);
        prop_assert!(a.div_exact(&d).is_some());
        prop_assert!(b.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&f).is_some(), "{:?} does not divide {:?}", f, d);
        prop_assert_eq!(d.leading_coeff(), int(1));
    }
}

//! The field `Q(Δ, x)` of rational functions in the formal parameters used by
//! the KZ derivation: `Δ` (lowest conformal weight) and `x` (standing for `e/k`).

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::Field;
use super::mpoly::MPoly;
use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

const NPARAMS: usize = 2;

/// Named formal parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Delta,
    X,
}

impl Param {
    fn index(self) -> usize {
        match self {
            Param::Delta => 0,
            Param::X => 1,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Param::Delta => "Δ",
            Param::X => "x",
        }
    }
}

/// Element of `Q(Δ, x)`, always stored as `num/den` with `gcd(num, den) = 1`
/// and the lex-leading coefficient of `den` equal to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamField {
    num: MPoly,
    den: MPoly,
}

impl ParamField {
    pub fn param(p: Param) -> Self {
        ParamField {
            num: MPoly::var(NPARAMS, p.index()),
            den: MPoly::one(NPARAMS),
        }
    }

    pub fn delta() -> Self {
        Self::param(Param::Delta)
    }

    pub fn x() -> Self {
        Self::param(Param::X)
    }

    pub fn constant(c: Rational) -> Self {
        ParamField {
            num: MPoly::constant(NPARAMS, c),
            den: MPoly::one(NPARAMS),
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::constant(crate::symbolic::rational::int(v))
    }

    pub fn from_parts(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// `num/den` for coprime `num` and `den`, scaled so that `den` is monic.
    fn normalized(num: MPoly, den: MPoly) -> Self {
        let lc = den.leading_coeff();
        if One::is_one(&lc) {
            ParamField { num, den }
        } else {
            let s = lc.recip();
            ParamField {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return ParamField {
                num,
                den: MPoly::one(NPARAMS),
            };
        }
        let g = MPoly::gcd(&num, &den);
        let (num, den) = if g.as_constant().is_some() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalized(num, den)
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Substitute a rational value for a parameter.
    pub fn substitute(&self, p: Param, value: &Rational) -> Result<Self> {
        let den = self.den.substitute(p.index(), value);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.num.substitute(p.index(), value), den))
    }

    /// Value at `Δ = delta`, `x = x`.
    pub fn eval(&self, delta: &Rational, x: &Rational) -> Result<Rational> {
        let vals = [delta.clone(), x.clone()];
        let d = self.den.eval(&vals);
        if Zero::is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(&vals) / d)
    }
}

fn exact(p: &MPoly, d: &MPoly) -> MPoly {
    if d.as_constant().is_some_and(|c| One::is_one(&c)) {
        return p.clone();
    }
    p.div_exact(d).expect("divisor of a gcd")
}

/// `p` times a common denominator of its coefficients, as a polynomial in
/// `(z, Δ, x)`.
fn lift(p: &UPoly<ParamField>) -> MPoly {
    let mut den = MPoly::one(NPARAMS);
    for c in p.coeffs() {
        let g = MPoly::gcd(&den, &c.den);
        den = den.mul(&c.den.div_exact(&g).expect("gcd divides"));
    }
    let mut out = MPoly::zero(NPARAMS + 1);
    for (i, c) in p.coeffs().iter().enumerate() {
        let scaled = c.num.mul(&den.div_exact(&c.den).expect("common denominator"));
        for (m, v) in scaled.terms() {
            let mut exps = alloc::vec![i as u32];
            exps.extend_from_slice(m);
            out = out.add(&MPoly::monomial(NPARAMS + 1, exps, v.clone()));
        }
    }
    out
}

fn lower(p: &MPoly) -> UPoly<ParamField> {
    let deg = p.degree_in(0).unwrap_or(0);
    let coeffs = (0..=deg)
        .map(|d| {
            let c = p.coeff_in(0, d);
            let mut num = MPoly::zero(NPARAMS);
            for (m, v) in c.terms() {
                num = num.add(&MPoly::monomial(NPARAMS, m[1..].to_vec(), v.clone()));
            }
            ParamField { num, den: MPoly::one(NPARAMS) }
        })
        .collect();
    UPoly::from_coeffs(coeffs)
}

impl Field for ParamField {
    fn zero() -> Self {
        Self::constant(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        Self::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let g = MPoly::gcd(&self.den, &o.den);
        let (bg, dg) = (exact(&self.den, &g), exact(&o.den, &g));
        let t = self.num.mul(&dg).add(&o.num.mul(&bg));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = MPoly::gcd(&t, &g);
        Self::normalized(exact(&t, &g2), bg.mul(&exact(&o.den, &g2)))
    }
    fn sub(&self, o: &Self) -> Self {
        Field::add(self, &Field::neg(o))
    }
    fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        let g1 = MPoly::gcd(&self.num, &o.den);
        let g2 = MPoly::gcd(&o.num, &self.den);
        Self::normalized(
            exact(&self.num, &g1).mul(&exact(&o.num, &g2)),
            exact(&self.den, &g2).mul(&exact(&o.den, &g1)),
        )
    }
    fn neg(&self) -> Self {
        ParamField {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }
    /// Euclid over `Q(Δ, x)` swells quickly, so clear denominators and take a
    /// gcd in `Q[z, Δ, x]` instead.
    fn poly_gcd(a: &UPoly<Self>, b: &UPoly<Self>) -> Option<UPoly<Self>> {
        let g = MPoly::gcd(&lift(a), &lift(b));
        Some(lower(&g).monic())
    }

    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
}

macro_rules! param_binop {
    ($tr:ident, $method:ident, $call:expr) => {
        impl $tr for ParamField {
            type Output = ParamField;
            fn $method(self, rhs: ParamField) -> ParamField {
                $call(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a ParamField> for &'a ParamField {
            type Output = ParamField;
            fn $method(self, rhs: &'a ParamField) -> ParamField {
                $call(self, rhs)
            }
        }
    };
}

param_binop!(Add, add, |a: &ParamField, b: &ParamField| Field::add(a, b));
param_binop!(Sub, sub, |a: &ParamField, b: &ParamField| Field::sub(a, b));
param_binop!(Mul, mul, |a: &ParamField, b: &ParamField| Field::mul(a, b));
param_binop!(Div, div, |a: &ParamField, b: &ParamField| Field::div(a, b)
    .expect("division by zero in ParamField"));

impl Neg for ParamField {
    type Output = ParamField;
    fn neg(self) -> ParamField {
        Field::neg(&self)
    }
}

fn fmt_poly(p: &MPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let names = [Param::Delta.symbol(), Param::X.symbol()];
    let mut first = true;
    for (m, c) in p.terms().collect::<alloc::vec::Vec<_>>().into_iter().rev() {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        let is_unit = m.iter().all(|&e| e == 0);
        if is_unit || !One::is_one(c) {
            write!(f, "({c})")?;
        }
        for (e, name) in m.iter().zip(names) {
            match e {
                0 => {}
                1 => write!(f, "{name}")?,
                _ => write!(f, "{name}^{e}")?,
            }
        }
    }
    Ok(())
}

impl fmt::Debug for ParamField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ParamField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            fmt_poly(&self.num, f)
        } else {
            write!(f, "[")?;
            fmt_poly(&self.num, f)?;
            write!(f, "]/[")?;
            fmt_poly(&self.den, f)?;
            write!(f, "]")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::rat;

    #[test]
    fn cancels_common_factors() {
        let d = ParamField::delta();
        let x = ParamField::x();
        // (Δ^2 - x^2) / (Δ - x) = Δ + x
        let num = &(&d * &d) - &(&x * &x);
        let den = &d - &x;
        assert_eq!(&num / &den, &d + &x);
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = ParamField::x();
        let a = &ParamField::from_i64(1) / &(&x * &ParamField::from_i64(2));
        let b = &ParamField::constant(rat(1, 2)) / &x;
        assert_eq!(a, b);
        assert!(One::is_one(&a.denominator().leading_coeff()));
    }

    #[test]
    fn substitution() {
        let d = ParamField::delta();
        let x = ParamField::x();
        let f = &(&d * &ParamField::from_i64(2)) / &x;
        assert!(f.substitute(Param::X, &<Rational as Zero>::zero()).is_err());
        assert_eq!(
            f.substitute(Param::Delta, &rat(1, 2)).unwrap(),
            &ParamField::from_i64(1) / &x
        );
        assert_eq!(f.eval(&rat(3, 1), &rat(2, 1)).unwrap(), rat(3, 1));
    }
}

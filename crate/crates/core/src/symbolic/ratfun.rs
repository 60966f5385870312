//! Univariate rational functions in `z` with coefficients in a [`Field`].

use core::fmt;

use super::field::Field;
use super::param::{Param, ParamField};
use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

fn exact<F: Field>(p: &UPoly<F>, d: &UPoly<F>) -> UPoly<F> {
    if d.degree() == Some(0) {
        return p.clone();
    }
    p.divrem(d).expect("nonzero divisor").0
}

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun<F: Field> {
    num: UPoly<F>,
    den: UPoly<F>,
}

/// Rational functions in `z` over `Q(Δ, x)`.
pub type RationalFunction = RatFun<ParamField>;

impl<F: Field> RatFun<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UPoly<F>, den: UPoly<F>) -> Self {
        if num.is_zero() {
            return RatFun {
                num,
                den: UPoly::one(),
            };
        }
        let g = UPoly::gcd(&num, &den);
        Self::normalized(exact(&num, &g), exact(&den, &g))
    }

    /// `num/den` for coprime `num` and `den`, scaled so that `den` is monic.
    fn normalized(num: UPoly<F>, den: UPoly<F>) -> Self {
        let lc = den.leading().cloned().expect("nonzero denominator");
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let s = lc.inv().expect("nonzero");
            RatFun {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn z() -> Self {
        Self::from_poly(UPoly::z())
    }

    pub fn from_poly(p: UPoly<F>) -> Self {
        RatFun {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn numerator(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let g = UPoly::gcd(&self.den, &o.den);
        let (bg, dg) = (exact(&self.den, &g), exact(&o.den, &g));
        let t = self.num.mul(&dg).add(&o.num.mul(&bg));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = UPoly::gcd(&t, &g);
        Self::normalized(exact(&t, &g2), bg.mul(&exact(&o.den, &g2)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = UPoly::gcd(&self.num, &o.den);
        let g2 = UPoly::gcd(&o.num, &self.den);
        Self::normalized(
            exact(&self.num, &g1).mul(&exact(&o.num, &g2)),
            exact(&self.den, &g2).mul(&exact(&o.den, &g1)),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().div(self)
    }

    /// `d/dz`.
    pub fn differentiate(&self) -> Self {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        Self::reduce(n, self.den.mul(&self.den))
    }

    /// Apply a coefficient map (e.g. a parameter specialisation) and re-normalise.
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<RatFun<G>> {
        RatFun::new(self.num.try_map(&f)?, self.den.try_map(&f)?)
    }

    pub fn eval(&self, z: &F) -> Result<F> {
        let d = self.den.eval(z);
        self.num.eval(z).div(&d).ok_or(Error::DivisionByZero)
    }
}

impl RatFun<Rational> {
    /// Floating-point value at `z`.
    pub fn eval_f64(&self, z: f64) -> f64 {
        let horner = |p: &UPoly<Rational>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * z + super::rational::to_f64(c))
        };
        horner(&self.num) / horner(&self.den)
    }
}

impl RationalFunction {
    /// Constant rational function from a parameter-field element.
    pub fn param(p: ParamField) -> Self {
        Self::constant(p)
    }

    /// Specialise a parameter to a rational value.
    pub fn substitute(&self, p: Param, value: &Rational) -> Result<Self> {
        self.try_map(|c| c.substitute(p, value))
    }

    /// Specialise both parameters, giving a rational function over `Q`.
    pub fn specialize(&self, delta: &Rational, x: &Rational) -> Result<RatFun<Rational>> {
        self.try_map(|c| c.eval(delta, x))
    }
}

fn fmt_upoly<F: Field + fmt::Display>(p: &UPoly<F>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "({c})")?,
            1 => write!(f, "({c})z")?,
            _ => write!(f, "({c})z^{i}")?,
        }
    }
    Ok(())
}

impl<F: Field + fmt::Display> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            fmt_upoly(&self.num, f)
        } else {
            write!(f, "[")?;
            fmt_upoly(&self.num, f)?;
            write!(f, "] / [")?;
            fmt_upoly(&self.den, f)?;
            write!(f, "]")
        }
    }
}

impl<F: Field + fmt::Display> fmt::Debug for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

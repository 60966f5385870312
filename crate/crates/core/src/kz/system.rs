//! Symbolic side of the KZ reduction: the first-order system for the pair
//! `(φ₁, φ₃)`, its elimination to a second-order ODE for `φ₃`, and the gauge
//! transform to the hypergeometric equation.

use core::fmt;

use crate::error::{Error, Result};
use crate::symbolic::field::Field;
use crate::symbolic::param::{Param, ParamField};
use crate::symbolic::ratfun::{RatFun, RationalFunction};
use crate::symbolic::rational::{int, Rational};
use crate::symbolic::upoly::UPoly;

type Rf = RationalFunction;

fn konst(c: ParamField) -> Rf {
    Rf::constant(c)
}

fn num(v: i64) -> Rf {
    konst(ParamField::from_i64(v))
}

fn one_minus_z() -> Rf {
    num(1).sub(&Rf::z())
}

fn inv(f: &Rf) -> Rf {
    f.recip().expect("nonzero by construction")
}

/// `z(1 - z)`
pub fn z_one_minus_z() -> Rf {
    Rf::z().mul(&one_minus_z())
}

/// `2Δ((1 - z)^{-1} - z^{-1})`
fn diagonal_term() -> Rf {
    let two_delta = ParamField::from_i64(2).mul(&ParamField::delta());
    inv(&one_minus_z()).sub(&inv(&Rf::z())).scale(&two_delta)
}

/// `(φ₁', φ₃') = M(z) (φ₁, φ₃)` with entries in `Q(Δ, x)(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstOrderSystem {
    m: [[Rf; 2]; 2],
}

impl FirstOrderSystem {
    pub fn new(m: [[Rf; 2]; 2]) -> Self {
        FirstOrderSystem { m }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rf {
        &self.m[i][j]
    }

    pub fn trace(&self) -> Rf {
        self.m[0][0].add(&self.m[1][1])
    }

    pub fn scale(&self, c: &ParamField) -> Self {
        FirstOrderSystem {
            m: self.m.clone().map(|row| row.map(|e| e.scale(c))),
        }
    }

    pub fn substitute(&self, p: Param, value: &Rational) -> Result<Self> {
        let mut out = self.clone();
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e = e.substitute(p, value)?;
            }
        }
        Ok(out)
    }

    /// Every entry has poles only at `z = 0` and `z = 1`.
    pub fn poles_in_zero_one(&self) -> bool {
        self.m.iter().flatten().all(|e| {
            let den = e.denominator();
            let allowed = UPoly::from_coeffs(alloc::vec![ParamField::zero(), ParamField::one()])
                .mul(&UPoly::from_coeffs(alloc::vec![
                    ParamField::from_i64(-1),
                    ParamField::one()
                ]));
            // a squarefree den with roots in {0, 1} divides z(z - 1)
            matches!(allowed.divrem(den), Some((_, r)) if r.is_zero())
        })
    }
}

/// `a₂ φ'' + a₁ φ' + a₀ φ = 0`.
#[derive(Clone, PartialEq)]
pub struct SecondOrderOde<F: Field = ParamField> {
    pub a2: RatFun<F>,
    pub a1: RatFun<F>,
    pub a0: RatFun<F>,
}

impl<F: Field> SecondOrderOde<F> {
    pub fn new(a2: RatFun<F>, a1: RatFun<F>, a0: RatFun<F>) -> Result<Self> {
        if a2.is_zero() {
            return Err(Error::InvalidInput("leading coefficient vanishes".into()));
        }
        Ok(SecondOrderOde { a2, a1, a0 })
    }

    /// Rescale so that `a₂ = z(1 - z)`.
    pub fn normalized(&self) -> Self {
        let target = RatFun::<F>::z().mul(&RatFun::one().sub(&RatFun::z()));
        let factor = target.div(&self.a2).expect("a2 is nonzero");
        SecondOrderOde {
            a2: target,
            a1: self.a1.mul(&factor),
            a0: self.a0.mul(&factor),
        }
    }

    /// Equality as ODEs, i.e. up to an overall nonzero factor.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Pull back through `φ = u f` where `u'/u = w`.
    pub fn gauge(&self, w: &RatFun<F>) -> Self {
        let b1 = w.scale(&F::from_rational(int(2))).mul(&self.a2).add(&self.a1);
        let b0 = self
            .a2
            .mul(&w.differentiate().add(&w.mul(w)))
            .add(&self.a1.mul(w))
            .add(&self.a0);
        SecondOrderOde { a2: self.a2.clone(), a1: b1, a0: b0 }
    }
}

impl SecondOrderOde<ParamField> {
    pub fn substitute(&self, p: Param, value: &Rational) -> Result<Self> {
        Ok(SecondOrderOde {
            a2: self.a2.substitute(p, value)?,
            a1: self.a1.substitute(p, value)?,
            a0: self.a0.substitute(p, value)?,
        })
    }

    pub fn specialize(&self, delta: &Rational, x: &Rational) -> Result<SecondOrderOde<Rational>> {
        Ok(SecondOrderOde {
            a2: self.a2.specialize(delta, x)?,
            a1: self.a1.specialize(delta, x)?,
            a0: self.a0.specialize(delta, x)?,
        })
    }
}

impl SecondOrderOde<Rational> {
    /// Coefficients evaluated in floating point.
    pub fn eval_f64(&self, z: f64) -> [f64; 3] {
        [self.a2.eval_f64(z), self.a1.eval_f64(z), self.a0.eval_f64(z)]
    }
}

impl<F: Field + fmt::Display> fmt::Display for SecondOrderOde<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] φ'' + [{}] φ' + [{}] φ = 0", self.a2, self.a1, self.a0)
    }
}

impl<F: Field + fmt::Display> fmt::Debug for SecondOrderOde<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The system obeyed by `φ₁ = φ(v₀, ψ⁻v, v', v)` and `φ₃ = φ(v₀, v, v', ψ⁻v)`:
/// `M = [[d, -x/(1-z)], [x/z, d]]` with `d = 2Δ((1-z)^{-1} - z^{-1})`.
pub fn build_first_order_system() -> FirstOrderSystem {
    let x = ParamField::x();
    let d = diagonal_term();
    FirstOrderSystem::new([
        [d.clone(), inv(&one_minus_z()).scale(&x.neg())],
        [inv(&Rf::z()).scale(&x), d],
    ])
}

/// Eliminate `φ₁` using the second row and return the normalized ODE for `φ₃`.
pub fn eliminate_to_second_order(sys: &FirstOrderSystem) -> Result<SecondOrderOde> {
    let [[a, b], [c, d]] = &sys.m;
    if c.is_zero() {
        return Err(Error::InvalidInput(
            "lower-left entry vanishes; the first component cannot be eliminated".into(),
        ));
    }
    // φ₁ = (φ₃' - d φ₃)/c; then φ₁' = a φ₁ + b φ₃, multiplied through by c.
    let log_c = c.differentiate().div(c)?;
    let c1 = d.neg().sub(&log_c).sub(a);
    let c0 = d
        .differentiate()
        .neg()
        .add(&log_c.mul(d))
        .add(&a.mul(d))
        .sub(&b.mul(c));
    Ok(SecondOrderOde::new(Rf::one(), c1, c0)?.normalized())
}

/// The second-order ODE written out by hand:
/// `z(1-z)φ'' + [(4Δ+1) - (8Δ+1)z]φ' + [4Δ²/z + 2Δ(2Δ-1)/(1-z) + x² - 16Δ²]φ = 0`.
pub fn main_diff_eq() -> SecondOrderOde {
    let dl = ParamField::delta();
    let x = ParamField::x();
    let c = ParamField::from_i64;
    let dl2 = dl.mul(&dl);
    let a1 = UPoly::from_coeffs(alloc::vec![
        c(4).mul(&dl).add(&c(1)),
        c(8).mul(&dl).add(&c(1)).neg(),
    ]);
    let a0 = inv(&Rf::z())
        .scale(&c(4).mul(&dl2))
        .add(&inv(&one_minus_z()).scale(&c(2).mul(&dl).mul(&c(2).mul(&dl).sub(&c(1)))))
        .add(&konst(x.mul(&x).sub(&c(16).mul(&dl2))));
    SecondOrderOde {
        a2: z_one_minus_z(),
        a1: Rf::from_poly(a1),
        a0,
    }
}

/// `z(1-z)f'' + (1-z)f' + x² f = 0`, the hypergeometric equation with `(a, b, c) = (x, -x, 1)`.
pub fn hypergeometric_ode() -> SecondOrderOde {
    let x = ParamField::x();
    SecondOrderOde {
        a2: z_one_minus_z(),
        a1: one_minus_z(),
        a0: konst(x.mul(&x)),
    }
}

/// Logarithmic derivative of `z^{-s}(1-z)^{-s}`.
fn gauge_log_derivative(s: &ParamField) -> Rf {
    inv(&one_minus_z()).sub(&inv(&Rf::z())).scale(s)
}

/// Transport `ode` through `f = z^s (1-z)^s φ` and compare with [`hypergeometric_ode`].
pub fn check_transform_of(ode: &SecondOrderOde, s: &ParamField) -> bool {
    ode.gauge(&gauge_log_derivative(s)).equivalent(&hypergeometric_ode())
}

/// The transform with exponent `s = 2Δ` sends the main ODE to the hypergeometric one.
pub fn check_transform() -> bool {
    let two_delta = ParamField::from_i64(2).mul(&ParamField::delta());
    check_transform_of(&main_diff_eq(), &two_delta)
}

/// The two scalar relations obeyed by `φ(v₀, v, v', v)`:
/// `-2Δφ - zφ' = first_rhs · φ` and `φ' = second · φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Vanish1Relations {
    pub first_rhs: Rf,
    pub second: Rf,
    pub x: ParamField,
}

/// Result of reducing the two relations to a single multiple of `φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Vanish1Report {
    /// `residue · φ = 0` after substitution.
    pub residue: Rf,
    /// The residue equals `x`.
    pub holds: bool,
    /// The residue is identically zero, so the relation carries no information.
    pub degenerate: bool,
}

impl Vanish1Relations {
    pub fn standard() -> Self {
        let dl2 = ParamField::from_i64(2).mul(&ParamField::delta());
        let x = ParamField::x();
        let first_rhs = inv(&one_minus_z())
            .scale(&dl2.neg())
            .add(&konst(dl2.add(&x)));
        Vanish1Relations { first_rhs, second: diagonal_term(), x }
    }

    /// Replace `x` by a number.
    pub fn with_x(&self, value: &Rational) -> Result<Self> {
        Ok(Vanish1Relations {
            first_rhs: self.first_rhs.substitute(Param::X, value)?,
            second: self.second.substitute(Param::X, value)?,
            x: ParamField::constant(value.clone()),
        })
    }

    /// Flip the sign of the `(1-z)^{-1}` term of the first relation.
    pub fn with_sign_flip(&self) -> Self {
        let dl2 = ParamField::from_i64(4).mul(&ParamField::delta());
        Vanish1Relations {
            first_rhs: self.first_rhs.add(&inv(&one_minus_z()).scale(&dl2)),
            ..self.clone()
        }
    }

    pub fn reduce(&self) -> Vanish1Report {
        let two_delta = ParamField::from_i64(2).mul(&ParamField::delta());
        let lhs = konst(two_delta.neg()).sub(&Rf::z().mul(&self.second));
        let residue = self.first_rhs.sub(&lhs);
        Vanish1Report {
            holds: residue == konst(self.x.clone()),
            degenerate: residue.is_zero(),
            residue,
        }
    }
}

/// Substituting the second relation into the first leaves exactly `x φ = 0`.
pub fn verify_vanish1() -> bool {
    Vanish1Relations::standard().reduce().holds
}

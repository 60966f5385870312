use core::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::upoly::UPoly;

/// Minimal field interface used by [`UPoly`](super::UPoly) and [`RatFun`](super::RatFun).
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Monic gcd of two polynomials over this field by some route other than
    /// the Euclidean algorithm, or `None` to use Euclid.
    fn poly_gcd(_a: &UPoly<Self>, _b: &UPoly<Self>) -> Option<UPoly<Self>> {
        None
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

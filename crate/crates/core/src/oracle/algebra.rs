//! The Lie superalgebra `gl(1|1)` in the basis `{N, E, ψ⁺, ψ⁻}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symbolic::rational::Rational;

use super::matrix::QMatrix;

/// Basis elements, in the fixed order used for coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    N,
    E,
    PsiPlus,
    PsiMinus,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::N, Basis::E, Basis::PsiPlus, Basis::PsiMinus];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Basis::PsiPlus | Basis::PsiMinus)
    }
}

/// An element `c_N N + c_E E + c_+ ψ⁺ + c_- ψ⁻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(pub [Rational; 4]);

impl Element {
    pub fn zero() -> Self {
        Element(core::array::from_fn(|_| Rational::zero()))
    }

    pub fn basis(b: Basis) -> Self {
        let mut e = Self::zero();
        e.0[b.index()] = Rational::one();
        e
    }

    pub fn coeff(&self, b: Basis) -> &Rational {
        &self.0[b.index()]
    }

    pub fn add(&self, o: &Self) -> Self {
        Element(core::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Element(core::array::from_fn(|i| &self.0[i] * s))
    }

    /// `Some(parity)` for homogeneous nonzero elements.
    pub fn parity(&self) -> Option<bool> {
        let even = !self.0[0].is_zero() || !self.0[1].is_zero();
        let odd = !self.0[2].is_zero() || !self.0[3].is_zero();
        match (even, odd) {
            (true, false) => Some(false),
            (false, true) => Some(true),
            _ => None,
        }
    }
}

/// Structure data of `gl(1|1)`: brackets and the invariant forms `κ`, `κ₂`.
#[derive(Clone, Debug)]
pub struct Gl11Algebra {
    kappa: QMatrix,
    kappa2: QMatrix,
}

impl Default for Gl11Algebra {
    fn default() -> Self {
        Self::new()
    }
}

impl Gl11Algebra {
    pub fn new() -> Self {
        let mut kappa = QMatrix::zeros(4, 4);
        let one = Rational::one();
        kappa.set(Basis::N.index(), Basis::E.index(), one.clone());
        kappa.set(Basis::E.index(), Basis::N.index(), one.clone());
        kappa.set(Basis::PsiPlus.index(), Basis::PsiMinus.index(), one.clone());
        kappa.set(Basis::PsiMinus.index(), Basis::PsiPlus.index(), -one.clone());
        let mut kappa2 = QMatrix::zeros(4, 4);
        kappa2.set(Basis::N.index(), Basis::N.index(), one);
        Gl11Algebra { kappa, kappa2 }
    }

    pub fn kappa_matrix(&self) -> &QMatrix {
        &self.kappa
    }

    pub fn kappa2_matrix(&self) -> &QMatrix {
        &self.kappa2
    }

    /// Super bracket of two basis elements.
    pub fn bracket_basis(a: Basis, b: Basis) -> Element {
        use Basis::*;
        let one = Rational::one();
        match (a, b) {
            (N, PsiPlus) => Element::basis(PsiPlus),
            (PsiPlus, N) => Element::basis(PsiPlus).scale(&-one),
            (N, PsiMinus) => Element::basis(PsiMinus).scale(&-one),
            (PsiMinus, N) => Element::basis(PsiMinus),
            (PsiPlus, PsiMinus) | (PsiMinus, PsiPlus) => Element::basis(E),
            _ => Element::zero(),
        }
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for x in Basis::ALL {
            for y in Basis::ALL {
                let c = a.coeff(x) * b.coeff(y);
                if !c.is_zero() {
                    out = out.add(&Self::bracket_basis(x, y).scale(&c));
                }
            }
        }
        out
    }

    fn form(m: &QMatrix, a: &Element, b: &Element) -> Rational {
        let mut s = Rational::zero();
        for i in 0..4 {
            for j in 0..4 {
                s += &a.0[i] * m.get(i, j) * &b.0[j];
            }
        }
        s
    }

    pub fn kappa(&self, a: &Element, b: &Element) -> Rational {
        Self::form(&self.kappa, a, b)
    }

    pub fn kappa2(&self, a: &Element, b: &Element) -> Rational {
        Self::form(&self.kappa2, a, b)
    }

    /// `κ([a,b],c) = κ(a,[b,c])` on all basis triples.
    pub fn kappa_is_invariant(&self) -> bool {
        Basis::ALL.iter().all(|&a| {
            Basis::ALL.iter().all(|&b| {
                Basis::ALL.iter().all(|&c| {
                    let (a, b, c) = (Element::basis(a), Element::basis(b), Element::basis(c));
                    self.kappa(&Self::bracket(&a, &b), &c) == self.kappa(&a, &Self::bracket(&b, &c))
                })
            })
        })
    }

    /// Super skew-symmetry and the super Jacobi identity on basis triples.
    pub fn satisfies_super_jacobi() -> bool {
        let sign = |x: Basis, y: Basis| {
            if x.is_odd() && y.is_odd() {
                Rational::one()
            } else {
                -Rational::one()
            }
        };
        let skew = Basis::ALL.iter().all(|&a| {
            Basis::ALL.iter().all(|&b| {
                Self::bracket_basis(a, b) == Self::bracket_basis(b, a).scale(&sign(a, b))
            })
        });
        let jacobi = Basis::ALL.iter().all(|&a| {
            Basis::ALL.iter().all(|&b| {
                Basis::ALL.iter().all(|&c| {
                    let (ea, eb, ec) = (Element::basis(a), Element::basis(b), Element::basis(c));
                    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
                    let lhs = Self::bracket(&ea, &Self::bracket(&eb, &ec));
                    let s = if a.is_odd() && b.is_odd() {
                        -Rational::one()
                    } else {
                        Rational::one()
                    };
                    let rhs = Self::bracket(&Self::bracket(&ea, &eb), &ec)
                        .add(&Self::bracket(&eb, &Self::bracket(&ea, &ec)).scale(&s));
                    lhs == rhs
                })
            })
        });
        skew && jacobi
    }
}

/// `ω_{λ,μ}`: `N ↦ N + λE`, `E ↦ μ²E`, `ψ± ↦ μψ±`.
pub fn apply_automorphism(lambda: &Rational, mu: &Rational, a: &Element) -> Result<Element> {
    if mu.is_zero() {
        return Err(Error::InvalidInput("automorphism requires mu != 0".into()));
    }
    let [n, e, p, m] = &a.0;
    Ok(Element([
        n.clone(),
        n * lambda + e * mu * mu,
        p * mu,
        m * mu,
    ]))
}

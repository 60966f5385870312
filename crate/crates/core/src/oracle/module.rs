//! Matrix realisations of finite-dimensional `gl(1|1)`-modules.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symbolic::rational::{half, Rational};

use super::algebra::{Basis, Element};
use super::matrix::QMatrix;

/// A finite-dimensional module of the three basic families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FinLabel {
    /// Verma module with highest weight vector of `N`-eigenvalue `n + 1/2`.
    Verma { n: Rational, e: Rational },
    /// One-dimensional module with `N = n`.
    Atypical { n: Rational },
    /// Four-dimensional projective cover of `Atypical(n)`.
    Projective { n: Rational },
}

impl FinLabel {
    pub fn verma(n: Rational, e: Rational) -> Self {
        FinLabel::Verma { n, e }
    }

    pub fn atypical(n: Rational) -> Self {
        FinLabel::Atypical { n }
    }

    pub fn projective(n: Rational) -> Self {
        FinLabel::Projective { n }
    }

    /// Irreducible unless it is a Verma module with `e = 0` or a projective.
    pub fn is_irreducible(&self) -> bool {
        match self {
            FinLabel::Verma { e, .. } => !e.is_zero(),
            FinLabel::Atypical { .. } => true,
            FinLabel::Projective { .. } => false,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FinLabel::Verma { .. } => 2,
            FinLabel::Atypical { .. } => 1,
            FinLabel::Projective { .. } => 4,
        }
    }
}

impl fmt::Display for FinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinLabel::Verma { n, e } => write!(f, "v({n};{e})"),
            FinLabel::Atypical { n } => write!(f, "a({n})"),
            FinLabel::Projective { n } => write!(f, "p({n})"),
        }
    }
}

/// Action matrices of `N, E, ψ⁺, ψ⁻` on a super vector space.
#[derive(Clone, PartialEq, Eq)]
pub struct Gl11MatrixModule {
    /// `true` marks an odd basis vector.
    parity: Vec<bool>,
    n: QMatrix,
    e: QMatrix,
    psi_plus: QMatrix,
    psi_minus: QMatrix,
}

impl fmt::Debug for Gl11MatrixModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gl11MatrixModule")
            .field("parity", &self.parity)
            .field("N", &self.n)
            .field("E", &self.e)
            .field("psi+", &self.psi_plus)
            .field("psi-", &self.psi_minus)
            .finish()
    }
}

impl Gl11MatrixModule {
    /// Assemble a module, checking every defining relation.
    pub fn new(
        parity: Vec<bool>,
        n: QMatrix,
        e: QMatrix,
        psi_plus: QMatrix,
        psi_minus: QMatrix,
    ) -> Result<Self> {
        let d = parity.len();
        for m in [&n, &e, &psi_plus, &psi_minus] {
            if m.rows() != d || m.cols() != d {
                return Err(Error::InvalidInput(format!(
                    "action matrix is {}x{}, expected {d}x{d}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let module = Gl11MatrixModule {
            parity,
            n,
            e,
            psi_plus,
            psi_minus,
        };
        module.check_relations()?;
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[bool] {
        &self.parity
    }

    pub fn action(&self, b: Basis) -> &QMatrix {
        match b {
            Basis::N => &self.n,
            Basis::E => &self.e,
            Basis::PsiPlus => &self.psi_plus,
            Basis::PsiMinus => &self.psi_minus,
        }
    }

    /// Matrix of an arbitrary algebra element.
    pub fn action_of(&self, x: &Element) -> QMatrix {
        Basis::ALL.iter().fold(QMatrix::zeros(self.dim(), self.dim()), |acc, &b| {
            acc.add(&self.action(b).scale(x.coeff(b)))
        })
    }

    fn parity_ok(&self, m: &QMatrix, odd: bool) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim())
                .all(|j| m.get(i, j).is_zero() || (self.parity[i] ^ self.parity[j]) == odd)
        })
    }

    /// Verify the super-bracket relations as exact matrix identities.
    pub fn check_relations(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Verification(format!("module relation fails: {what}")));
        if !self.parity_ok(&self.n, false) || !self.parity_ok(&self.e, false) {
            return fail("N, E must preserve parity");
        }
        if !self.parity_ok(&self.psi_plus, true) || !self.parity_ok(&self.psi_minus, true) {
            return fail("psi must reverse parity");
        }
        if self.n.commutator(&self.psi_plus) != self.psi_plus {
            return fail("[N, psi+] = psi+");
        }
        if self.n.commutator(&self.psi_minus) != self.psi_minus.scale(&-Rational::one()) {
            return fail("[N, psi-] = -psi-");
        }
        if !self.psi_plus.mul(&self.psi_plus).is_zero() || !self.psi_minus.mul(&self.psi_minus).is_zero() {
            return fail("psi squares to zero");
        }
        if self.psi_plus.anticommutator(&self.psi_minus) != self.e {
            return fail("{psi+, psi-} = E");
        }
        for b in Basis::ALL {
            if !self.e.commutator(self.action(b)).is_zero() {
                return fail("E is central");
            }
        }
        Ok(())
    }

    /// Parity operator `(-1)^{|v|}` on the basis.
    fn parity_operator(&self) -> QMatrix {
        let d: Vec<Rational> = self
            .parity
            .iter()
            .map(|&odd| if odd { -Rational::one() } else { Rational::one() })
            .collect();
        QMatrix::diagonal(&d)
    }
}

/// Explicit realisation of a [`FinLabel`].
pub fn realize(label: &FinLabel) -> Gl11MatrixModule {
    let one = Rational::one();
    let zero = Rational::zero();
    match label {
        FinLabel::Verma { n, e } => {
            let nm = QMatrix::diagonal(&[n + half(), n - half()]);
            let em = QMatrix::diagonal(&[e.clone(), e.clone()]);
            let pp = QMatrix::from_rows(vec![vec![zero.clone(), e.clone()], vec![zero.clone(), zero.clone()]]);
            let pm = QMatrix::from_rows(vec![vec![zero.clone(), zero.clone()], vec![one, zero]]);
            Gl11MatrixModule::new(vec![false, true], nm, em, pp, pm).expect("Verma relations")
        }
        FinLabel::Atypical { n } => {
            let z = QMatrix::zeros(1, 1);
            Gl11MatrixModule::new(vec![false], QMatrix::diagonal(core::slice::from_ref(n)), z.clone(), z.clone(), z)
                .expect("atypical relations")
        }
        FinLabel::Projective { n } => {
            // basis: v, ψ⁺v, ψ⁻v, ψ⁺ψ⁻v
            let nm = QMatrix::diagonal(&[n.clone(), n + &one, n - &one, n.clone()]);
            let mut pp = QMatrix::zeros(4, 4);
            pp.set(1, 0, one.clone());
            pp.set(3, 2, one.clone());
            let mut pm = QMatrix::zeros(4, 4);
            pm.set(2, 0, one.clone());
            pm.set(3, 1, -one);
            Gl11MatrixModule::new(vec![false, true, true, false], nm, QMatrix::zeros(4, 4), pp, pm)
                .expect("projective relations")
        }
    }
}

/// Graded tensor product: `X ↦ X ⊗ 1 + P^{|X|} ⊗ X` with `P` the parity operator.
pub fn tensor(a: &Gl11MatrixModule, b: &Gl11MatrixModule) -> Gl11MatrixModule {
    let ia = QMatrix::identity(a.dim());
    let ib = QMatrix::identity(b.dim());
    let pa = a.parity_operator();
    let act = |x: Basis| {
        let left = a.action(x).kron(&ib);
        let right = if x.is_odd() { pa.kron(b.action(x)) } else { ia.kron(b.action(x)) };
        left.add(&right)
    };
    let parity = a
        .parity
        .iter()
        .flat_map(|&p| b.parity.iter().map(move |&q| p ^ q))
        .collect();
    Gl11MatrixModule::new(
        parity,
        act(Basis::N),
        act(Basis::E),
        act(Basis::PsiPlus),
        act(Basis::PsiMinus),
    )
    .expect("the graded coproduct is a homomorphism")
}

/// Zero-mode `L_0` on a top space at level `k`:
/// `(1/k)(NE - ψ⁺ψ⁻) + E/(2k) + E²/(2k²)`.
pub fn l0_top_matrix(m: &Gl11MatrixModule, k: &Rational) -> Result<QMatrix> {
    if k.is_zero() {
        return Err(Error::InvalidInput("level k must be nonzero".into()));
    }
    let e = m.action(Basis::E);
    let inv_k = k.recip();
    let two = Rational::from_integer(2.into());
    let ne = m.action(Basis::N).mul(e);
    let pp_pm = m.action(Basis::PsiPlus).mul(m.action(Basis::PsiMinus));
    Ok(ne
        .sub(&pp_pm)
        .scale(&inv_k)
        .add(&e.scale(&(&inv_k / &two)))
        .add(&e.mul(e).scale(&(&inv_k * &inv_k / two))))
}

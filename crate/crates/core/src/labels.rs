//! Labels of modules in the Kazhdan–Lusztig category and in its projective
//! completion, together with their conformal weights, spectral flow,
//! contragredients and composition factors.
//!
//! Labels never store the level `k`: every parameter is normalised, so a typical
//! module carries `ê = e/k` and an atypical, reducible Verma or projective
//! module carries the integer `ℓ = e/k`.

use alloc::collections::btree_map;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::FinLabel;
use crate::symbolic::rational::{half, int, is_integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKind {
    /// Simple Verma module `V̂_{n,e}` with `ê ∉ ℤ`.
    TypicalV { n: Rational, ehat: Rational },
    /// Simple atypical module `Â_{n,ℓk}`.
    AtypicalA { n: Rational, ell: i64 },
    /// Reducible Verma module `V̂_{n,ℓk}`.
    VermaV0 { n: Rational, ell: i64 },
    /// Projective module `P̂_{n,ℓk}`.
    ProjectiveP { n: Rational, ell: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleLabel {
    pub kind: LabelKind,
    /// Parity-reversed copy.
    pub parity_flip: bool,
}

/// `ε(ℓ)`: `1/2`, `0`, `-1/2` for positive, zero and negative `ℓ`.
pub fn epsilon(ell: i64) -> Rational {
    match ell.signum() {
        1 => half(),
        -1 => -half(),
        _ => Rational::zero(),
    }
}

/// `ε(ℓ, ℓ') = ε(ℓ) + ε(ℓ') - ε(ℓ + ℓ')`.
pub fn epsilon2(ell: i64, ell2: i64) -> Rational {
    epsilon(ell) + epsilon(ell2) - epsilon(ell + ell2)
}

/// `Δ_{n,ê} = ê(n + ê/2)`.
pub fn delta_of(n: &Rational, ehat: &Rational) -> Rational {
    ehat * (n + ehat / int(2))
}

impl From<LabelKind> for ModuleLabel {
    fn from(kind: LabelKind) -> Self {
        ModuleLabel {
            kind,
            parity_flip: false,
        }
    }
}

impl ModuleLabel {
    /// Typical module; fails when `ê` is an integer.
    pub fn typical(n: Rational, ehat: Rational) -> Result<Self> {
        if is_integer(&ehat) {
            return Err(Error::InvalidInput(format!(
                "V({n};{ehat}) is not typical: e/k must not be an integer"
            )));
        }
        Ok(LabelKind::TypicalV { n, ehat }.into())
    }

    pub fn atypical(n: Rational, ell: i64) -> Self {
        LabelKind::AtypicalA { n, ell }.into()
    }

    pub fn verma0(n: Rational, ell: i64) -> Self {
        LabelKind::VermaV0 { n, ell }.into()
    }

    pub fn projective(n: Rational, ell: i64) -> Self {
        LabelKind::ProjectiveP { n, ell }.into()
    }

    /// The tensor unit `Â_{0,0}`.
    pub fn unit() -> Self {
        Self::atypical(Rational::zero(), 0)
    }

    pub fn with_parity(mut self, flip: bool) -> Self {
        self.parity_flip = flip;
        self
    }

    pub fn n(&self) -> &Rational {
        match &self.kind {
            LabelKind::TypicalV { n, .. }
            | LabelKind::AtypicalA { n, .. }
            | LabelKind::VermaV0 { n, .. }
            | LabelKind::ProjectiveP { n, .. } => n,
        }
    }

    /// `ê = e/k`.
    pub fn ehat(&self) -> Rational {
        match &self.kind {
            LabelKind::TypicalV { ehat, .. } => ehat.clone(),
            LabelKind::AtypicalA { ell, .. }
            | LabelKind::VermaV0 { ell, .. }
            | LabelKind::ProjectiveP { ell, .. } => int(*ell),
        }
    }

    /// `ℓ` for atypical-family labels.
    pub fn ell(&self) -> Option<i64> {
        match &self.kind {
            LabelKind::TypicalV { .. } => None,
            LabelKind::AtypicalA { ell, .. }
            | LabelKind::VermaV0 { ell, .. }
            | LabelKind::ProjectiveP { ell, .. } => Some(*ell),
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self.kind, LabelKind::TypicalV { .. } | LabelKind::AtypicalA { .. })
    }

    pub fn is_typical(&self) -> bool {
        matches!(self.kind, LabelKind::TypicalV { .. })
    }

    pub fn is_atypical(&self) -> bool {
        matches!(self.kind, LabelKind::AtypicalA { .. })
    }

    pub fn is_projective(&self) -> bool {
        matches!(self.kind, LabelKind::ProjectiveP { .. })
    }

    /// Lowest conformal weight. For `P̂_{n,ℓ}` with `ℓ ≠ 0` this is the smaller
    /// weight of its two Verma sections, `Δ_{n,ℓ} - |ℓ|`.
    pub fn delta(&self) -> Rational {
        match &self.kind {
            LabelKind::ProjectiveP { n, ell } if *ell != 0 => {
                delta_of(n, &int(*ell)) - int(ell.abs())
            }
            LabelKind::ProjectiveP { .. } => Rational::zero(),
            _ => delta_of(self.n(), &self.ehat()),
        }
    }

    /// Dimension of the lowest conformal weight space.
    pub fn top_dim(&self) -> usize {
        match &self.kind {
            LabelKind::AtypicalA { ell: 0, .. } => 1,
            LabelKind::ProjectiveP { ell: 0, .. } => 4,
            _ => 2,
        }
    }

    /// Spectral flow `σ^ℓ`.
    ///
    /// Defined on `ê = 0` sources (with `Â` only for `ℓ ≤ 0`), and on reducible
    /// Vermas for the flow back to `ê = 0`.
    pub fn spectral_flow(&self, l: i64) -> Result<ModuleLabel> {
        if l == 0 {
            return Ok(self.clone());
        }
        let undetermined = || {
            Err(Error::Undetermined(format!(
                "spectral flow by {l} is not determined for {self:?}"
            )))
        };
        let kind = match &self.kind {
            LabelKind::VermaV0 { n, ell: 0 } => LabelKind::VermaV0 { n: n - int(l), ell: l },
            LabelKind::VermaV0 { n, ell } if ell + l == 0 => {
                // the return trip of σ^ℓ(V̂_{m,0}) = V̂_{m-ℓ,ℓ}
                LabelKind::VermaV0 { n: n + int(*ell), ell: 0 }
            }
            LabelKind::ProjectiveP { n, ell: 0 } if l < 0 => LabelKind::ProjectiveP {
                n: n - int(l) - half(),
                ell: l,
            },
            LabelKind::ProjectiveP { n, ell: 0 } => LabelKind::ProjectiveP {
                n: -n - int(l) + half(),
                ell: l,
            },
            LabelKind::AtypicalA { n, ell: 0 } if l < 0 => LabelKind::AtypicalA {
                n: n - int(l) - half(),
                ell: l,
            },
            _ => return undetermined(),
        };
        Ok(ModuleLabel {
            kind,
            parity_flip: self.parity_flip,
        })
    }

    /// Contragredient module.
    pub fn contragredient(&self) -> Result<ModuleLabel> {
        let (kind, flip) = match &self.kind {
            LabelKind::AtypicalA { n, ell } => (
                LabelKind::AtypicalA { n: -n, ell: -ell },
                self.parity_flip,
            ),
            LabelKind::TypicalV { n, ehat } => (
                LabelKind::TypicalV { n: -n, ehat: -ehat },
                !self.parity_flip,
            ),
            LabelKind::ProjectiveP { n, ell: 0 } => {
                (LabelKind::ProjectiveP { n: -n, ell: 0 }, self.parity_flip)
            }
            _ => {
                return Err(Error::Undetermined(format!(
                    "contragredient is not determined for {self:?}"
                )))
            }
        };
        Ok(ModuleLabel {
            kind,
            parity_flip: flip,
        })
    }

    /// Projective cover of a simple module.
    pub fn projective_cover(&self) -> Result<ModuleLabel> {
        match &self.kind {
            LabelKind::TypicalV { .. } => Ok(self.clone()),
            LabelKind::AtypicalA { n, ell } => Ok(ModuleLabel {
                kind: LabelKind::ProjectiveP { n: n.clone(), ell: *ell },
                parity_flip: self.parity_flip,
            }),
            _ => Err(Error::InvalidInput(format!(
                "projective cover requested for non-simple {self:?}"
            ))),
        }
    }

    /// Composition factors in the Grothendieck group.
    pub fn k_decompose(&self) -> FormalSum {
        let one = Rational::one();
        let a = |n: Rational, ell: i64| ModuleLabel::atypical(n, ell).with_parity(self.parity_flip);
        let mut out = FormalSum::new();
        match &self.kind {
            LabelKind::TypicalV { .. } | LabelKind::AtypicalA { .. } => out.add_label(self.clone(), 1),
            LabelKind::VermaV0 { n, ell: 0 } => {
                out.add_label(a(n - half(), 0), 1);
                out.add_label(a(n + half(), 0), 1);
            }
            LabelKind::VermaV0 { n, ell } => {
                out.add_label(a(n.clone(), *ell), 1);
                out.add_label(a(n + int(ell.signum()), *ell), 1);
            }
            LabelKind::ProjectiveP { n, ell } => {
                out.add_label(a(n.clone(), *ell), 2);
                out.add_label(a(n + &one, *ell), 1);
                out.add_label(a(n - &one, *ell), 1);
            }
        }
        out
    }

    /// The `gl(1|1)`-module on the lowest conformal weight space, at level `k = 1`.
    pub fn top_space(&self) -> FinLabel {
        match &self.kind {
            LabelKind::TypicalV { n, ehat } => FinLabel::verma(n.clone(), ehat.clone()),
            LabelKind::AtypicalA { n, ell: 0 } => FinLabel::atypical(n.clone()),
            LabelKind::ProjectiveP { n, ell: 0 } => FinLabel::projective(n.clone()),
            LabelKind::AtypicalA { n, ell } | LabelKind::VermaV0 { n, ell } => {
                FinLabel::verma(n.clone(), int(*ell))
            }
            LabelKind::ProjectiveP { n, ell } => {
                FinLabel::verma(n - int(2) * epsilon(*ell), int(*ell))
            }
        }
    }
}

/// A finite direct sum (or Grothendieck-group element) with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum(BTreeMap<ModuleLabel, u64>);

impl FormalSum {
    pub fn new() -> Self {
        FormalSum(BTreeMap::new())
    }

    pub fn single(label: ModuleLabel) -> Self {
        let mut s = Self::new();
        s.add_label(label, 1);
        s
    }

    pub fn add_label(&mut self, label: ModuleLabel, multiplicity: u64) {
        if multiplicity > 0 {
            *self.0.entry(label).or_default() += multiplicity;
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (l, m) in &o.0 {
            out.add_label(l.clone(), *m);
        }
        out
    }

    pub fn scale(&self, s: u64) -> Self {
        if s == 0 {
            return Self::new();
        }
        FormalSum(self.0.iter().map(|(l, m)| (l.clone(), m * s)).collect())
    }

    pub fn multiplicity(&self, label: &ModuleLabel) -> u64 {
        self.0.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, ModuleLabel, u64> {
        self.0.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ModuleLabel> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.0.values().sum()
    }

    /// The unique label if the sum is a single summand of multiplicity one.
    pub fn as_single(&self) -> Option<&ModuleLabel> {
        match self.0.iter().next() {
            Some((l, 1)) if self.0.len() == 1 => Some(l),
            _ => None,
        }
    }

    /// Apply `k_decompose` to every summand.
    pub fn k_decompose(&self) -> FormalSum {
        self.0
            .iter()
            .fold(FormalSum::new(), |acc, (l, m)| acc.add(&l.k_decompose().scale(*m)))
    }

    /// Forget parity flags.
    pub fn without_parity(&self) -> FormalSum {
        let mut out = FormalSum::new();
        for (l, m) in &self.0 {
            out.add_label(l.clone().with_parity(false), *m);
        }
        out
    }
}

impl FromIterator<(ModuleLabel, u64)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (ModuleLabel, u64)>>(iter: I) -> Self {
        let mut s = FormalSum::new();
        for (l, m) in iter {
            s.add_label(l, m);
        }
        s
    }
}

impl<'a> IntoIterator for &'a FormalSum {
    type Item = (&'a ModuleLabel, &'a u64);
    type IntoIter = btree_map::Iter<'a, ModuleLabel, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Labels of the summands, repeated by multiplicity.
pub fn expand(sum: &FormalSum) -> Vec<ModuleLabel> {
    sum.iter()
        .flat_map(|(l, m)| core::iter::repeat_n(l.clone(), *m as usize))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::rat;

    #[test]
    fn conformal_weights() {
        assert_eq!(ModuleLabel::typical(int(1), rat(1, 2)).unwrap().delta(), rat(5, 8));
        assert_eq!(ModuleLabel::atypical(rat(3, 7), 0).delta(), int(0));
        assert_eq!(ModuleLabel::atypical(rat(-1, 2), 1).delta(), int(0));
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(3), half());
        assert_eq!(epsilon(0), int(0));
        assert_eq!(epsilon2(1, -1), int(0));
        assert_eq!(epsilon2(1, 1), half());
    }

    #[test]
    fn flows() {
        let n = rat(1, 3);
        let p = ModuleLabel::projective(n.clone(), 0);
        assert_eq!(p.spectral_flow(0).unwrap(), p);
        assert_eq!(p.spectral_flow(-1).unwrap(), ModuleLabel::projective(&n + half(), -1));
        assert_eq!(
            ModuleLabel::verma0(n.clone(), 0).spectral_flow(-1).unwrap(),
            ModuleLabel::verma0(&n + int(1), -1)
        );
        let typ = ModuleLabel::typical(n, rat(1, 2)).unwrap();
        assert!(matches!(typ.spectral_flow(1), Err(Error::Undetermined(_))));
        assert!(ModuleLabel::atypical(int(0), 0).spectral_flow(2).is_err());
    }

    #[test]
    fn contragredients() {
        let u = ModuleLabel::unit();
        assert_eq!(u.contragredient().unwrap(), u);
        let v = ModuleLabel::typical(rat(1, 4), rat(1, 2)).unwrap();
        let dual = v.contragredient().unwrap();
        assert_eq!(dual.kind, LabelKind::TypicalV { n: rat(-1, 4), ehat: rat(-1, 2) });
        assert!(dual.parity_flip);
        assert_eq!(
            ModuleLabel::projective(int(2), 0).contragredient().unwrap(),
            ModuleLabel::projective(int(-2), 0)
        );
        assert!(ModuleLabel::projective(int(2), 1).contragredient().is_err());
        assert!(ModuleLabel::verma0(int(2), 0).contragredient().is_err());
    }

    #[test]
    fn covers() {
        let v = ModuleLabel::typical(int(1), rat(1, 3)).unwrap();
        assert_eq!(v.projective_cover().unwrap(), v);
        assert_eq!(
            ModuleLabel::atypical(rat(1, 2), -2).projective_cover().unwrap(),
            ModuleLabel::projective(rat(1, 2), -2)
        );
        assert!(ModuleLabel::projective(int(0), 0).projective_cover().is_err());
    }

    #[test]
    fn composition_factors() {
        let k = ModuleLabel::verma0(int(0), 0).k_decompose();
        assert_eq!(
            k,
            [(ModuleLabel::atypical(rat(-1, 2), 0), 1), (ModuleLabel::atypical(half(), 0), 1)]
                .into_iter()
                .collect()
        );
        let n = rat(2, 5);
        let k = ModuleLabel::verma0(n.clone(), 1).k_decompose();
        assert_eq!(k.multiplicity(&ModuleLabel::atypical(&n + int(1), 1)), 1);
        let k = ModuleLabel::projective(n.clone(), 0).k_decompose();
        assert_eq!(k.multiplicity(&ModuleLabel::atypical(n, 0)), 2);
        assert_eq!(k.total_multiplicity(), 4);
    }

    #[test]
    fn top_dimensions() {
        assert_eq!(ModuleLabel::atypical(int(3), 0).top_dim(), 1);
        assert_eq!(ModuleLabel::projective(int(0), 0).top_dim(), 4);
        assert_eq!(ModuleLabel::atypical(int(0), 2).top_dim(), 2);
    }
}

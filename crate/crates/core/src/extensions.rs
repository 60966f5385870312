//! Simple current extensions of `V_1(gl(1|1))` generated by an atypical simple
//! current `Â_{a,b}`, in particular `V_{-1/2}(sl(2|1))` (generator `Â_{1/2,-2}`)
//! and `V_1(sl(2|1))` (generator `Â_{1/2,1}`).
//!
//! The `m`-th summand of the extension is `Â_{a,b}^{⊠m}`, which by the
//! atypical fusion rule is `Â_{ma - (m - sgn m)ε(b), mb}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::characters::char_induced_typical;
use crate::error::{Error, Result};
use crate::fusion::fuse;
use crate::labels::{delta_of, epsilon, LabelKind, ModuleLabel};
use crate::symbolic::jacobi::JacobiSeries;
use crate::symbolic::rational::{half, int, is_integer, to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtensionKind {
    Sl21MinusHalf,
    Sl21Level1,
    Custom,
}

/// Extension generated by `Â_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionSpec {
    pub kind: ExtensionKind,
    a: Rational,
    b: i64,
}

/// Admissibility of a custom generator; violations are reported, not fatal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub warnings: Vec<String>,
}

impl ExtensionSpec {
    pub fn sl21_minus_half() -> Self {
        ExtensionSpec { kind: ExtensionKind::Sl21MinusHalf, a: half(), b: -2 }
    }

    pub fn sl21_level1() -> Self {
        ExtensionSpec { kind: ExtensionKind::Sl21Level1, a: half(), b: 1 }
    }

    /// The extension `W_{n+1/2, ℓ}` generated by `Â_{n+1/2, ℓ}`.
    pub fn custom(n: Rational, ell: i64) -> Result<Self> {
        let a = n + half();
        if a.is_zero() && ell == 0 {
            return Err(Error::InvalidInput(
                "the generator A(0;0) is the unit and generates no extension".into(),
            ));
        }
        Ok(ExtensionSpec { kind: ExtensionKind::Custom, a, b: ell })
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            ExtensionKind::Sl21MinusHalf => "sl21-neg-half",
            ExtensionKind::Sl21Level1 => "sl21-level1",
            ExtensionKind::Custom => "custom",
        }
    }

    pub fn generator(&self) -> ModuleLabel {
        ModuleLabel::atypical(self.a.clone(), self.b)
    }

    /// `|ℓ| ≤ 2Δ_{n+1/2,ℓ}` and `2nℓ ∈ ℤ`, with `n = a - 1/2`.
    pub fn admissibility(&self) -> Admissibility {
        let n = &self.a - half();
        let ell = int(self.b);
        let mut warnings = Vec::new();
        let bound = int(2) * delta_of(&self.a, &ell);
        if ell.abs() > bound {
            warnings.push(format!("|l| = {} exceeds 2*Delta = {bound}", ell.abs()));
        }
        if !is_integer(&(int(2) * &n * &ell)) {
            warnings.push(format!("2nl = {} is not an integer", int(2) * &n * &ell));
        }
        Admissibility { warnings }
    }

    /// The `m`-th summand `Â_{a,b}^{⊠m}`.
    pub fn generator_of(&self, m: i64) -> ModuleLabel {
        let n = int(m) * &self.a - int(m - m.signum()) * epsilon(self.b);
        ModuleLabel::atypical(n, m * self.b)
    }
}

fn single(label: &ModuleLabel, c: &ModuleLabel) -> Result<ModuleLabel> {
    let sum = fuse(label, c)?;
    sum.as_single().cloned().ok_or_else(|| {
        Error::Verification(format!(
            "{} x {} is not a single module",
            crate::text::render(label),
            crate::text::render(c)
        ))
    })
}

fn require_simple(s: &ModuleLabel) -> Result<()> {
    if s.is_simple() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{} is not simple", crate::text::render(s))))
    }
}

/// `Δ(s ⊠ c) - Δ(s) - Δ(c)`; the monodromy of `s` with `c` is trivial exactly
/// when this is an integer.
pub fn monodromy_exponent(s: &ModuleLabel, c: &ModuleLabel) -> Result<Rational> {
    require_simple(s)?;
    if !c.is_atypical() {
        return Err(Error::InvalidInput(format!(
            "{} is not an atypical simple current",
            crate::text::render(c)
        )));
    }
    let f = single(s, c)?;
    if !f.is_simple() {
        return Err(Error::InvalidInput(format!(
            "{} is not simple",
            crate::text::render(&f)
        )));
    }
    Ok(f.delta() - s.delta() - c.delta())
}

/// Trivial monodromy with the whole extension. The exponent is additive in `m`
/// modulo `ℤ`, so the generators `m = ±1` decide it.
pub fn is_local(s: &ModuleLabel, ext: &ExtensionSpec) -> Result<bool> {
    for m in [1, -1] {
        if !is_integer(&monodromy_exponent(s, &ext.generator_of(m))?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Known closed-form locality criteria for the two `sl(2|1)` extensions;
/// `None` for custom extensions or non-simple labels.
pub fn closed_form_local(s: &ModuleLabel, ext: &ExtensionSpec) -> Option<bool> {
    let two = int(2);
    match (&ext.kind, &s.kind) {
        (ExtensionKind::Sl21MinusHalf, LabelKind::AtypicalA { n, .. }) => Some(is_integer(&(&two * n))),
        (ExtensionKind::Sl21MinusHalf, LabelKind::TypicalV { n, ehat }) => {
            Some(is_integer(&(&two * n + ehat)))
        }
        (ExtensionKind::Sl21Level1, LabelKind::AtypicalA { n, ell }) => Some(if *ell == 0 {
            is_integer(n)
        } else {
            is_integer(&(n - half()))
        }),
        (ExtensionKind::Sl21Level1, LabelKind::TypicalV { n, ehat }) => {
            Some(is_integer(&(n + ehat - half())))
        }
        _ => None,
    }
}

/// Summands `s ⊠ Â_{a,b}^{⊠m}` for `|m| ≤ m_range`, in increasing `m`.
pub fn induce(s: &ModuleLabel, ext: &ExtensionSpec, m_range: i64) -> Result<Vec<(i64, ModuleLabel)>> {
    if m_range < 0 {
        return Err(Error::InvalidInput("m range must be nonnegative".into()));
    }
    if !(s.is_simple() || s.is_projective()) {
        return Err(Error::InvalidInput(format!(
            "{} is neither simple nor projective",
            crate::text::render(s)
        )));
    }
    (-m_range..=m_range)
        .map(|m| Ok((m, single(s, &ext.generator_of(m))?)))
        .collect()
}

fn same_module(a: &ModuleLabel, b: &ModuleLabel) -> bool {
    a.kind == b.kind
}

/// The `m` with `s2 ≅ s ⊠ Â_{a,b}^{⊠m}`, if any. Solved from the `ê` shift
/// `mb`, or from the `n` shift `ma` when `b = 0`.
pub fn equivalence_shift(s: &ModuleLabel, s2: &ModuleLabel, ext: &ExtensionSpec) -> Result<Option<i64>> {
    require_simple(s)?;
    require_simple(s2)?;
    let shift = if ext.b != 0 {
        (s2.ehat() - s.ehat()) / int(ext.b)
    } else {
        (s2.n() - s.n()) / &ext.a
    };
    let Some(m) = to_i64(&shift).filter(|_| is_integer(&shift)) else {
        return Ok(None);
    };
    let image = single(s, &ext.generator_of(m))?;
    Ok(same_module(&image, s2).then_some(m))
}

/// `s` and `s2` induce to isomorphic modules.
pub fn induced_equivalent(s: &ModuleLabel, s2: &ModuleLabel, ext: &ExtensionSpec) -> Result<bool> {
    Ok(equivalence_shift(s, s2, ext)?.is_some())
}

/// Summands of the induced projective cover, the induction of `P(s)`.
pub fn induced_projective_cover(
    s: &ModuleLabel,
    ext: &ExtensionSpec,
    m_range: i64,
) -> Result<Vec<(i64, ModuleLabel)>> {
    if !is_local(s, ext)? {
        return Err(Error::InvalidInput(format!(
            "{} does not induce to a local module",
            crate::text::render(s)
        )));
    }
    induce(&s.projective_cover()?, ext, m_range)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    /// Some direction of `m` has constant conformal weight.
    RelaxedFlat,
    /// Conformal weights are unbounded below.
    SpectralFlowUnbounded,
    /// Conformal weights grow in both directions.
    LowestWeight,
}

impl GrowthClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthClass::RelaxedFlat => "relaxed_flat",
            GrowthClass::SpectralFlowUnbounded => "spectral_flow_unbounded",
            GrowthClass::LowestWeight => "lowest_weight",
        }
    }
}

/// `Δ(summand m) = q m² + l₊ m + c₊` for large positive `m` and
/// `q m² + l₋ m + c₋` for large negative `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightGrowth {
    pub quadratic_coeff: Rational,
    pub linear_coeff: Rational,
    pub linear_coeff_negative: Rational,
    pub classification: GrowthClass,
}

/// Quadratic through three points, returned as `(q, l, c)`.
fn fit(points: &[(i64, Rational); 3]) -> (Rational, Rational, Rational) {
    let [(m0, d0), (m1, d1), (m2, d2)] = points.clone().map(|(m, d)| (int(m), d));
    let s01 = (&d1 - &d0) / (&m1 - &m0);
    let s12 = (&d2 - &d1) / (&m2 - &m1);
    let q = (&s12 - &s01) / (&m2 - &m0);
    let l = &s01 - &q * (&m0 + &m1);
    let c = &d0 - &q * &m0 * &m0 - &l * &m0;
    (q, l, c)
}

/// Growth of the lowest conformal weights of the summands of the induction of `s`.
///
/// The atypical weights jump with the sign of `ℓ + mb`, so each direction is
/// fitted separately beyond `|m| = |ℓ| + 2`, where that sign is constant, and
/// checked at a fourth point.
pub fn weight_growth(s: &ModuleLabel, ext: &ExtensionSpec) -> Result<WeightGrowth> {
    if !(s.is_typical() || s.is_atypical()) {
        return Err(Error::InvalidInput(format!(
            "{} is neither typical nor atypical",
            crate::text::render(s)
        )));
    }
    let m0 = s.ell().map_or(0, i64::abs) + 2;
    let weight = |m: i64| -> Result<Rational> { Ok(single(s, &ext.generator_of(m))?.delta()) };
    let branch = |dir: i64| -> Result<(Rational, Rational)> {
        let ms = [m0, m0 + 1, m0 + 2].map(|m| dir * m);
        let pts = [(ms[0], weight(ms[0])?), (ms[1], weight(ms[1])?), (ms[2], weight(ms[2])?)];
        let (q, l, c) = fit(&pts);
        let check = dir * (m0 + 3);
        let r = int(check);
        if &q * &r * &r + &l * &r + c != weight(check)? {
            return Err(Error::Verification(format!(
                "conformal weights of summands are not quadratic in m (direction {dir})"
            )));
        }
        Ok((q, l))
    };
    let (q, lp) = branch(1)?;
    let (qn, ln) = branch(-1)?;
    if q != qn {
        return Err(Error::Verification("quadratic growth differs between directions".into()));
    }
    let classification = if q.is_positive() {
        GrowthClass::LowestWeight
    } else if q.is_negative() || lp.is_negative() || ln.is_positive() {
        GrowthClass::SpectralFlowUnbounded
    } else if lp.is_zero() || ln.is_zero() {
        GrowthClass::RelaxedFlat
    } else {
        GrowthClass::LowestWeight
    };
    Ok(WeightGrowth {
        quadratic_coeff: q,
        linear_coeff: lp,
        linear_coeff_negative: ln,
        classification,
    })
}

/// Character of the induction of `V̂_{n,ê}` to `V_{-1/2}(sl(2|1))`, summed over
/// `|m| ≤ m_range`. Both the sum of summand characters and the product form are
/// computed, and a mismatch is an error.
pub fn induced_character(
    n: &Rational,
    ehat: &Rational,
    m_range: i64,
    q_cutoff: &Rational,
) -> Result<JacobiSeries> {
    ModuleLabel::typical(n.clone(), ehat.clone())?;
    let (lhs, rhs) = char_induced_typical(n, ehat, m_range, q_cutoff)?;
    let window = lhs.q_cutoff().cloned().expect("truncated series");
    if !JacobiSeries::equal_to_cutoff(&lhs, &rhs, &window)? {
        return Err(Error::Verification(
            "summed and product forms of the induced character disagree".into(),
        ));
    }
    Ok(lhs)
}

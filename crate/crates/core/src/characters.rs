//! Characters in the Jacobi variables `(z, y; q)`.
//!
//! The Verma character is
//! `q^Δ y^ê z^n ∏_{i≥0} (1 + z q^{i+1})(1 + z^{-1} q^i) / (1 - q^{i+1})^2`,
//! with the `z^n` prefactor taken literally (so the `q^Δ` slice is `z^n + z^{n-1}`).

use alloc::format;
use alloc::vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::labels::{delta_of, LabelKind, ModuleLabel};
use crate::symbolic::jacobi::JacobiSeries;
use crate::symbolic::rational::{half, int, Rational};

fn check_cutoff(q_cutoff: &Rational) -> Result<i64> {
    if q_cutoff.is_negative() {
        return Err(Error::InvalidInput(format!("q cutoff {q_cutoff} is negative")));
    }
    q_cutoff
        .floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("q cutoff too large".into()))
}

/// `∏_{i≥0} (1 + z q^{i+1})(1 + z^{-1} q^i) / (1 - q^{i+1})^2` up to `q^{cutoff}`.
///
/// Built on a dense `(q, z)` table where each factor is applied in place.
pub fn verma_product(q_cutoff: &Rational) -> Result<JacobiSeries> {
    let k = check_cutoff(q_cutoff)? as usize;
    let off = k + 1;
    let width = 2 * k + 3;
    let mut t = vec![vec![BigInt::zero(); width]; k + 1];
    t[0][off] = BigInt::one();
    for i in 0..=k {
        let s = i + 1;
        // (1 + z q^s): descending q so sources are not yet updated
        for q in (s..=k).rev() {
            for z in (1..width).rev() {
                if !t[q - s][z - 1].is_zero() {
                    let v = t[q - s][z - 1].clone();
                    t[q][z] += v;
                }
            }
        }
        // (1 + z^{-1} q^i)
        if i == 0 {
            for row in t.iter_mut() {
                for z in 0..width - 1 {
                    if !row[z + 1].is_zero() {
                        let v = row[z + 1].clone();
                        row[z] += v;
                    }
                }
            }
        } else {
            for q in (i..=k).rev() {
                for z in 0..width - 1 {
                    if !t[q - i][z + 1].is_zero() {
                        let v = t[q - i][z + 1].clone();
                        t[q][z] += v;
                    }
                }
            }
        }
        // 1/(1 - q^s), twice: ascending q
        for _ in 0..2 {
            for q in s..=k {
                let (lower, upper) = t.split_at_mut(q);
                for (dst, src) in upper[0].iter_mut().zip(&lower[q - s]) {
                    if !src.is_zero() {
                        *dst += src;
                    }
                }
            }
        }
    }
    let zero = Rational::zero();
    let terms = t.into_iter().enumerate().flat_map(|(q, row)| {
        let zero = zero.clone();
        row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(z, c)| {
            ((int(q as i64), int(z as i64 - off as i64), zero.clone()), c)
        })
    });
    JacobiSeries::from_terms(terms, zero.clone(), Some(q_cutoff.clone()))
}

/// Character of the Verma module `V̂_{n,ê}`, exact up to `q^{Δ + q_cutoff}`.
pub fn char_verma(n: &Rational, ehat: &Rational, q_cutoff: &Rational) -> Result<JacobiSeries> {
    Ok(verma_product(q_cutoff)?.shift(&delta_of(n, ehat), n, ehat))
}

/// Character of `Â_{n,0}` as the alternating sum `Σ_{m≥0} (-1)^m ch V̂_{n-1/2-m,0}`,
/// restricted to `z`-exponents in `[z_lo, z_hi]`.
///
/// The `q^j` slice of a Verma character with prefactor `z^c` has `z`-exponents in
/// `[c - j - 1, c + j]`, so only `m ≤ n - 1/2 + q_cutoff - z_lo` contribute.
pub fn char_atypical0(
    n: &Rational,
    q_cutoff: &Rational,
    z_lo: &Rational,
    z_hi: &Rational,
) -> Result<JacobiSeries> {
    if z_lo > z_hi {
        return Err(Error::InvalidInput(format!("empty z window [{z_lo}, {z_hi}]")));
    }
    let k = check_cutoff(q_cutoff)?;
    let m_max = (n - half() + int(k) - z_lo).floor().to_integer();
    let zero = Rational::zero();
    let product = verma_product(q_cutoff)?;
    let mut out = JacobiSeries::from_terms([], zero.clone(), Some(q_cutoff.clone()))?;
    let mut m = BigInt::zero();
    while m <= m_max {
        let c = n - half() - Rational::from_integer(m.clone());
        let term = product.shift(&zero, &c, &zero).restrict_z(z_lo, z_hi);
        out = if m.is_even() { out.add(&term) } else { out.sub(&term) };
        m += BigInt::one();
    }
    Ok(out)
}

/// Default `z` window holding every term of `ch Â_{n,0}` up to `q^{q_cutoff}`.
pub fn atypical0_window(n: &Rational, q_cutoff: &Rational) -> (Rational, Rational) {
    let k = q_cutoff.floor();
    (n - half() - &k - int(1), n - half() + k)
}

/// Both sides of the induced-character identity for the level `-1/2` extension:
/// `lhs = Σ_{|m|≤M} ch V̂_{n+m, ê-2m}` and
/// `rhs = ch V̂_{n,ê} · Σ_{|m|≤M} q^{-m(2n+ê)} y^{-2m} z^m`.
///
/// Both are exact on `q ≤ Δ_{n,ê} + q_cutoff` and share the same origin (the lowest
/// summand weight) and cutoff.
pub fn char_induced_typical(
    n: &Rational,
    ehat: &Rational,
    m_range: i64,
    q_cutoff: &Rational,
) -> Result<(JacobiSeries, JacobiSeries)> {
    if m_range < 1 {
        return Err(Error::InvalidInput("m_range must be at least 1".into()));
    }
    check_cutoff(q_cutoff)?;
    let delta = delta_of(n, ehat);
    let top = &delta + q_cutoff;
    let slope = int(2) * n + ehat;
    let weight = |m: i64| &delta - int(m) * &slope;
    let origin = (-m_range..=m_range).map(weight).min().expect("nonempty range");

    let product = verma_product(&(&top - &origin))?;
    let mut lhs = JacobiSeries::from_terms([], origin.clone(), Some(&top - &origin))?;
    for m in -m_range..=m_range {
        let w = weight(m);
        if w > top {
            continue;
        }
        let summand = product
            .truncate(&(&top - &w))
            .shift(&w, &(n + int(m)), &(ehat - int(2 * m)));
        lhs = lhs.add(&summand);
    }

    let shifts = JacobiSeries::from_terms(
        (-m_range..=m_range).map(|m| ((-int(m) * &slope, int(m), int(-2 * m)), BigInt::one())),
        &origin - &delta,
        None,
    )?;
    let rhs = product.shift(&delta, n, ehat).mul(&shifts);
    Ok((lhs.with_origin(&origin)?, rhs.with_origin(&origin)?))
}

/// Character of a label where a formula is available: Verma-type labels and
/// `Â_{n,0}`. `z_window` applies to the atypical case only.
pub fn character(
    label: &ModuleLabel,
    q_cutoff: &Rational,
    z_window: Option<(Rational, Rational)>,
) -> Result<JacobiSeries> {
    match &label.kind {
        LabelKind::TypicalV { n, ehat } => char_verma(n, ehat, q_cutoff),
        LabelKind::VermaV0 { n, ell } => char_verma(n, &int(*ell), q_cutoff),
        LabelKind::AtypicalA { n, ell: 0 } => {
            let (lo, hi) = z_window.unwrap_or_else(|| atypical0_window(n, q_cutoff));
            char_atypical0(n, q_cutoff, &lo, &hi)
        }
        _ => Err(Error::Undetermined(format!(
            "no character formula for {}",
            crate::text::render(label)
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::rat;

    fn c(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lowest_slices() {
        let zero = Rational::zero();
        let ch = char_verma(&zero, &zero, &zero).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch.coeff(&zero, &zero, &zero), c(1));
        assert_eq!(ch.coeff(&zero, &int(-1), &zero), c(1));

        let ch = char_verma(&zero, &int(1), &zero).unwrap();
        assert_eq!(ch.coeff(&half(), &zero, &int(1)), c(1));
        assert_eq!(ch.coeff(&half(), &int(-1), &int(1)), c(1));
    }

    #[test]
    fn first_excited_slice() {
        // q^{Δ+1}: z + 3 + 3 z^{-1} + z^{-2} (times z^n y^ê); eight states in total
        let (n, e) = (rat(1, 3), rat(2, 5));
        let ch = char_verma(&n, &e, &int(1)).unwrap();
        let q1 = delta_of(&n, &e) + int(1);
        let expect = [(1, 1), (0, 3), (-1, 3), (-2, 1)];
        for (dz, coeff) in expect {
            assert_eq!(ch.coeff(&q1, &(&n + int(dz)), &e), c(coeff), "z^{dz}");
        }
        assert_eq!(ch.q_slice(&q1).count(), 4);
    }

    #[test]
    fn vacuum_character_starts_at_one_state() {
        let zero = Rational::zero();
        let ch = char_atypical0(&zero, &int(2), &int(-4), &int(3)).unwrap();
        let slice: alloc::vec::Vec<_> = ch.q_slice(&zero).collect();
        assert_eq!(slice.len(), 1);
        assert_eq!(slice[0].0 .1, rat(-1, 2));
        assert!(ch.terms().all(|(_, v)| !v.is_negative()));
        assert!(char_atypical0(&zero, &int(2), &int(1), &int(0)).is_err());
    }
}

//! Truncated series in `q`, `z`, `y` with rational exponents and integer
//! coefficients.
//!
//! A series carries a lower bound `q_origin` for the `q`-exponents of its
//! support and an optional `q_cutoff`: every coefficient with
//! `q_origin <= q_exp <= q_origin + q_cutoff` is exact and nothing above that is
//! stored. A missing cutoff means the series is an exact finite sum.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent triple `(q, z, y)`; ordered by `q` first, then `z`, then `y`.
pub type Exponent = (Rational, Rational, Rational);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiSeries {
    terms: BTreeMap<Exponent, BigInt>,
    q_origin: Rational,
    q_cutoff: Option<Rational>,
}

impl JacobiSeries {
    /// The exact zero series.
    pub fn zero() -> Self {
        JacobiSeries {
            terms: BTreeMap::new(),
            q_origin: Rational::zero(),
            q_cutoff: None,
        }
    }

    /// An exact monomial `c q^a z^b y^d`.
    pub fn monomial(q: Rational, z: Rational, y: Rational, c: BigInt) -> Self {
        let mut s = JacobiSeries {
            terms: BTreeMap::new(),
            q_origin: q.clone(),
            q_cutoff: None,
        };
        if !c.is_zero() {
            s.terms.insert((q, z, y), c);
        }
        s
    }

    pub fn one() -> Self {
        Self::monomial(Rational::zero(), Rational::zero(), Rational::zero(), BigInt::from(1))
    }

    /// Build from explicit terms. Terms outside the window are dropped; terms
    /// below `q_origin` are rejected.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Exponent, BigInt)>,
        q_origin: Rational,
        q_cutoff: Option<Rational>,
    ) -> Result<Self> {
        if q_cutoff.as_ref().is_some_and(|c| c.is_negative()) {
            return Err(Error::InvalidInput("negative q cutoff".into()));
        }
        let mut s = JacobiSeries {
            terms: BTreeMap::new(),
            q_origin,
            q_cutoff,
        };
        for (e, c) in terms {
            if e.0 < s.q_origin {
                return Err(Error::InvalidInput(format!(
                    "q exponent {} below origin {}",
                    e.0, s.q_origin
                )));
            }
            s.add_term(e, c);
        }
        Ok(s)
    }

    pub fn q_origin(&self) -> &Rational {
        &self.q_origin
    }

    pub fn q_cutoff(&self) -> Option<&Rational> {
        self.q_cutoff.as_ref()
    }

    /// Largest `q` exponent at which coefficients are exact (`None` = all).
    pub fn q_top(&self) -> Option<Rational> {
        self.q_cutoff.as_ref().map(|c| &self.q_origin + c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, q: &Rational, z: &Rational, y: &Rational) -> BigInt {
        self.terms
            .get(&(q.clone(), z.clone(), y.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Smallest `q` exponent actually present.
    pub fn min_q(&self) -> Option<&Rational> {
        self.terms.keys().next().map(|e| &e.0)
    }

    fn in_window(&self, q: &Rational) -> bool {
        match self.q_top() {
            Some(top) => *q <= top,
            None => true,
        }
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() || !self.in_window(&e.0) {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn exact_zero(&self) -> bool {
        self.terms.is_empty() && self.q_cutoff.is_none()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.exact_zero() {
            return o.clone();
        }
        if o.exact_zero() {
            return self.clone();
        }
        let origin = self.q_origin.clone().min(o.q_origin.clone());
        let top = match (self.q_top(), o.q_top()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = JacobiSeries {
            terms: BTreeMap::new(),
            q_cutoff: top.map(|t| t - &origin),
            q_origin: origin,
        };
        for (e, c) in self.terms.iter().chain(o.terms.iter()) {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        JacobiSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            q_origin: self.q_origin.clone(),
            q_cutoff: self.q_cutoff.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = self.clone();
        if s.is_zero() {
            out.terms.clear();
        } else {
            for c in out.terms.values_mut() {
                *c *= s;
            }
        }
        out
    }

    /// Truncated product. The result is exact up to
    /// `origin_a + origin_b + min(cutoff_a, cutoff_b)`.
    pub fn mul(&self, o: &Self) -> Self {
        if self.exact_zero() || o.exact_zero() {
            return Self::zero();
        }
        let origin = &self.q_origin + &o.q_origin;
        let cutoff = match (&self.q_cutoff, &o.q_cutoff) {
            (Some(a), Some(b)) => Some(a.clone().min(b.clone())),
            (a, b) => a.clone().or(b.clone()),
        };
        let mut out = JacobiSeries {
            terms: BTreeMap::new(),
            q_origin: origin,
            q_cutoff: cutoff,
        };
        let top = out.q_top();
        for ((qa, za, ya), ca) in &self.terms {
            for ((qb, zb, yb), cb) in &o.terms {
                let q = qa + qb;
                if top.as_ref().is_some_and(|t| q > *t) {
                    // terms of `o` are sorted by q
                    break;
                }
                out.add_term((q, za + zb, ya + yb), ca * cb);
            }
        }
        out
    }

    /// Multiply by the exact monomial `q^a z^b y^d`.
    pub fn shift(&self, q: &Rational, z: &Rational, y: &Rational) -> Self {
        JacobiSeries {
            terms: self
                .terms
                .iter()
                .map(|((a, b, d), c)| ((a + q, b + z, d + y), c.clone()))
                .collect(),
            q_origin: &self.q_origin + q,
            q_cutoff: self.q_cutoff.clone(),
        }
    }

    /// Keep only `q` exponents at most `q_origin + cutoff`.
    pub fn truncate(&self, cutoff: &Rational) -> Self {
        let cutoff = match &self.q_cutoff {
            Some(c) if c < cutoff => c.clone(),
            _ => cutoff.clone(),
        };
        let top = &self.q_origin + &cutoff;
        JacobiSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0 <= top)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
            q_origin: self.q_origin.clone(),
            q_cutoff: Some(cutoff),
        }
    }

    /// Re-anchor the window at a lower origin keeping the same absolute top.
    pub fn with_origin(&self, origin: &Rational) -> Result<Self> {
        if self.terms.keys().any(|e| e.0 < *origin) || *origin > self.q_origin {
            return Err(Error::InvalidInput("origin above series support".into()));
        }
        Ok(JacobiSeries {
            terms: self.terms.clone(),
            q_cutoff: self.q_top().map(|t| t - origin),
            q_origin: origin.clone(),
        })
    }

    /// Keep only terms whose `z` exponent lies in `[lo, hi]`.
    pub fn restrict_z(&self, lo: &Rational, hi: &Rational) -> Self {
        JacobiSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.1 >= *lo && e.1 <= *hi)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
            q_origin: self.q_origin.clone(),
            q_cutoff: self.q_cutoff.clone(),
        }
    }

    /// Terms with the given `q` exponent.
    pub fn q_slice<'a>(&'a self, q: &'a Rational) -> impl Iterator<Item = (&'a Exponent, &'a BigInt)> {
        self.terms.iter().filter(move |(e, _)| e.0 == *q)
    }

    /// Compare coefficients on `[m, m + window]`, where `m` is the smaller of the
    /// two origins. Fails if the window reaches past either cutoff.
    pub fn equal_to_cutoff(a: &Self, b: &Self, window: &Rational) -> Result<bool> {
        let base = a.q_origin.clone().min(b.q_origin.clone());
        let top = &base + window;
        for s in [a, b] {
            if let Some(t) = s.q_top() {
                if top > t {
                    return Err(Error::InvalidInput(format!(
                        "comparison window up to q^{top} exceeds series cutoff q^{t}"
                    )));
                }
            }
        }
        let pick = |s: &Self| -> Vec<(Exponent, BigInt)> {
            s.terms
                .iter()
                .filter(|(e, _)| e.0 <= top)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect()
        };
        Ok(pick(a) == pick(b))
    }
}

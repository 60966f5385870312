//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are exponent vectors compared lexicographically, so variable 0 is
//! the most significant.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::rational::Rational;
use super::upoly::UPoly;

type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(nvars, m, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        debug_assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.insert_add(m, ca * cb);
            }
        }
        out
    }

    fn mul_monomial(&self, m: &[u32], c: &Rational) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(m).map(|(a, b)| a + b).collect(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Degree in variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[i]).max()
    }

    /// Coefficient of `x_i^d`, as a polynomial not involving `x_i`.
    pub fn coeff_in(&self, i: usize, d: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[i] == d {
                let mut k = m.clone();
                k[i] = 0;
                out.terms.insert(k, c.clone());
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((rm, rc)) = r.leading() {
            if rm.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            let m: Monomial = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let c = rc / &dc;
            r = r.sub(&d.mul_monomial(&m, &c));
            q.insert_add(m, c);
        }
        Some(q)
    }

    /// Scaled so the lex-leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    fn active_vars(a: &Self, b: &Self) -> Vec<usize> {
        (0..a.nvars)
            .filter(|&i| a.degree_in(i).unwrap_or(0) > 0 || b.degree_in(i).unwrap_or(0) > 0)
            .collect()
    }

    /// View as a polynomial in the other variables with coefficients in `Q[x_v]`.
    fn split(&self, v: usize) -> Parts {
        let mut parts: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let e = k[v] as usize;
            k[v] = 0;
            let slot = parts.entry(k).or_default();
            if slot.len() <= e {
                slot.resize(e + 1, Rational::zero());
            }
            slot[e] += c;
        }
        parts.into_iter().map(|(k, c)| (k, UPoly::from_coeffs(c))).collect()
    }

    fn join(nvars: usize, v: usize, parts: &Parts) -> Self {
        let mut out = Self::zero(nvars);
        for (k, p) in parts {
            for (e, c) in p.coeffs().iter().enumerate() {
                let mut m = k.clone();
                m[v] = e as u32;
                out.insert_add(m, c.clone());
            }
        }
        out
    }

    fn from_upoly(nvars: usize, v: usize, p: &UPoly<Rational>) -> Self {
        Self::join(nvars, v, &BTreeMap::from([(vec![0; nvars], p.clone())]))
    }

    /// Monic greatest common divisor.
    ///
    /// Dense evaluation/interpolation in the last active variable `y`: remove
    /// the contents in `Q[y]`, take gcds of the images at `y = 1, 2, ...`
    /// recursively, scale them by the gcd of the leading coefficients,
    /// interpolate, and accept the primitive part once it divides both inputs.
    /// Images whose leading monomial is too large come from unlucky points and
    /// are dropped.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let n = a.nvars;
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return Self::one(n);
        }
        let vars = Self::active_vars(a, b);
        let Some(&y) = vars.last() else {
            return Self::one(n);
        };
        let (sa, sb) = (a.split(y), b.split(y));
        let (ca, cb) = (content(&sa), content(&sb));
        let common = Self::from_upoly(n, y, &qgcd(&ca, &cb));
        if vars.len() == 1 {
            return common;
        }
        let (pa, pb) = (primitive(sa, &ca), primitive(sb, &cb));
        let lca = pa.values().next_back().expect("nonzero").clone();
        let lcb = pb.values().next_back().expect("nonzero").clone();
        let gamma = qgcd(&lca, &lcb);
        let (ma, mb) = (Self::join(n, y, &pa), Self::join(n, y, &pb));
        let deg_y = |p: &Self| p.degree_in(y).unwrap_or(0) as usize;
        let bound = deg_y(&ma).min(deg_y(&mb)) + gamma.degree().unwrap_or(0);

        let mut images: Vec<(Rational, Self)> = Vec::new();
        let mut lead: Option<Monomial> = None;
        let mut alpha = 0i64;
        loop {
            alpha += 1;
            let t = Rational::from_integer(alpha.into());
            if lca.eval(&t).is_zero() || lcb.eval(&t).is_zero() {
                continue;
            }
            let g = Self::gcd(&ma.substitute(y, &t), &mb.substitute(y, &t));
            let gm = g.leading().expect("nonzero gcd").0.clone();
            if gm.iter().all(|&e| e == 0) {
                return common;
            }
            match lead.as_ref().map(|l| gm.cmp(l)) {
                Some(core::cmp::Ordering::Greater) => continue,
                Some(core::cmp::Ordering::Less) => images.clear(),
                _ => {}
            }
            lead = Some(gm);
            images.push((t.clone(), g.scale(&gamma.eval(&t))));
            if images.len() > bound {
                let cand = interpolate(n, y, &images).split(y);
                let cc = content(&cand);
                let cand = Self::join(n, y, &primitive(cand, &cc));
                if ma.div_exact(&cand).is_some() && mb.div_exact(&cand).is_some() {
                    return cand.mul(&common).monic();
                }
            }
        }
    }

    /// Replace `x_i` by the value `c`.
    pub fn substitute(&self, i: usize, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, coeff) in &self.terms {
            let mut k = m.clone();
            let e = k[i];
            k[i] = 0;
            let mut factor = coeff.clone();
            for _ in 0..e {
                factor *= c;
            }
            out.insert_add(k, factor);
        }
        out
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.iter().zip(values) {
                for _ in 0..*e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

type Parts = BTreeMap<Monomial, UPoly<Rational>>;

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_mod(r: &Rational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let residue = |v: &BigInt| v.mod_floor(&p).to_u64().expect("reduced below the prime");
    let den = residue(r.denom());
    (den != 0).then(|| mul_mod(residue(r.numer()), pow_mod(den, PRIME - 2)))
}

/// Whether `a` and `b` are certainly coprime, decided by their images modulo a
/// large prime. The image gcd can only be larger than the true one when the
/// prime divides a leading coefficient, which is checked.
fn coprime_mod_p(a: &UPoly<Rational>, b: &UPoly<Rational>) -> bool {
    let image = |p: &UPoly<Rational>| -> Option<Vec<u64>> {
        let v: Option<Vec<u64>> = p.coeffs().iter().map(reduce_mod).collect();
        v.filter(|v| v.last().is_some_and(|&l| l != 0))
    };
    let (Some(mut r0), Some(mut r1)) = (image(a), image(b)) else {
        return false;
    };
    while r1.len() > 1 {
        let inv = pow_mod(*r1.last().expect("nonempty"), PRIME - 2);
        while r0.len() >= r1.len() {
            let c = mul_mod(*r0.last().expect("nonempty"), inv);
            let k = r0.len() - r1.len();
            for (j, &d) in r1.iter().enumerate() {
                r0[k + j] = (r0[k + j] + PRIME - mul_mod(c, d)) % PRIME;
            }
            while r0.last() == Some(&0) {
                r0.pop();
            }
        }
        if r0.is_empty() {
            return false;
        }
        core::mem::swap(&mut r0, &mut r1);
    }
    r1.len() == 1
}

fn qgcd(a: &UPoly<Rational>, b: &UPoly<Rational>) -> UPoly<Rational> {
    if !a.is_zero() && !b.is_zero() && coprime_mod_p(a, b) {
        UPoly::one()
    } else {
        UPoly::gcd(a, b)
    }
}

fn content(parts: &Parts) -> UPoly<Rational> {
    let mut g = UPoly::zero();
    for p in parts.values() {
        g = qgcd(&g, p);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

fn primitive(parts: Parts, c: &UPoly<Rational>) -> Parts {
    parts
        .into_iter()
        .map(|(k, p)| (k, p.divrem(c).expect("nonzero content").0))
        .collect()
}

/// Lagrange interpolation in `x_v` of images taken at `x_v = t`.
fn interpolate(nvars: usize, v: usize, images: &[(Rational, MPoly)]) -> MPoly {
    let mut keys: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
    for (i, (_, g)) in images.iter().enumerate() {
        for (m, c) in &g.terms {
            keys.entry(m.clone()).or_insert_with(|| vec![Rational::zero(); images.len()])[i] = c.clone();
        }
    }
    let basis: Vec<UPoly<Rational>> = (0..images.len())
        .map(|i| {
            let ti = &images[i].0;
            images.iter().enumerate().filter(|(j, _)| *j != i).fold(
                UPoly::constant(Rational::one()),
                |acc, (_, (tj, _))| {
                    let factor = UPoly::from_coeffs(vec![-tj, Rational::one()]);
                    acc.mul(&factor).scale(&(ti - tj).recip())
                },
            )
        })
        .collect();
    let parts: Parts = keys
        .into_iter()
        .map(|(k, vals)| {
            let p = vals
                .iter()
                .zip(&basis)
                .fold(UPoly::zero(), |acc, (val, l)| acc.add(&l.scale(val)));
            (k, p)
        })
        .collect();
    MPoly::join(nvars, v, &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::{int, rat};

    fn x() -> MPoly {
        MPoly::var(2, 0)
    }
    fn y() -> MPoly {
        MPoly::var(2, 1)
    }
    fn c(v: i64) -> MPoly {
        MPoly::constant(2, int(v))
    }

    #[test]
    fn gcd_of_products() {
        let f = x().add(&y()); // x + y
        let g = x().sub(&c(2)).mul(&y()); // (x - 2) y
        let h = x().mul(&x()).add(&y().scale(&int(3))); // x^2 + 3y
        let a = f.mul(&g).mul(&h);
        let b = f.mul(&h).mul(&x().add(&c(7)));
        let expected = f.mul(&h).monic();
        assert_eq!(MPoly::gcd(&a, &b), expected);
    }

    #[test]
    fn gcd_coprime_and_constants() {
        assert_eq!(MPoly::gcd(&x(), &y()), MPoly::one(2));
        assert_eq!(MPoly::gcd(&c(6), &c(4)), MPoly::one(2));
        assert_eq!(MPoly::gcd(&MPoly::zero(2), &x().scale(&int(3))), x());
    }

    #[test]
    fn gcd_content_only() {
        let a = y().mul(&x().add(&c(1)));
        let b = y().mul(&y()).mul(&x().sub(&c(1)));
        assert_eq!(MPoly::gcd(&a, &b), y());
    }

    #[test]
    fn exact_division() {
        let f = x().add(&y()).mul(&x().sub(&y()));
        assert_eq!(f.div_exact(&x().add(&y())), Some(x().sub(&y())));
        assert_eq!(f.div_exact(&x().add(&c(1))), None);
    }

    #[test]
    fn substitute_and_eval() {
        let f = x().mul(&x()).add(&y().scale(&rat(1, 2)));
        assert_eq!(f.eval(&[int(3), int(4)]), int(11));
        assert_eq!(f.substitute(0, &int(2)), c(4).add(&y().scale(&rat(1, 2))));
    }
}

//! Brute-force decomposition of a matrix module into the basic families.
//!
//! The module is split into joint `(E, N)` eigenspaces. On each eigenspace we
//! record its dimension and the ranks of `ψ⁺`, `ψ⁻` and `ψ⁺ψ⁻` restricted to it.
//! These statistics are additive over direct sums, so a candidate multiset is
//! read off from them and then checked by recomputing its statistics exactly.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::symbolic::rational::{half, Rational};

use super::algebra::Basis;
use super::matrix::QMatrix;
use super::module::{realize, FinLabel, Gl11MatrixModule};

/// Dimension and restricted ranks on one joint eigenspace.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EigenStats {
    pub dim: usize,
    pub rank_psi_plus: usize,
    pub rank_psi_minus: usize,
    pub rank_psi_plus_minus: usize,
}

impl EigenStats {
    fn add(&mut self, o: &EigenStats) {
        self.dim += o.dim;
        self.rank_psi_plus += o.rank_psi_plus;
        self.rank_psi_minus += o.rank_psi_minus;
        self.rank_psi_plus_minus += o.rank_psi_plus_minus;
    }
}

/// Statistics keyed by `(E-eigenvalue, N-eigenvalue)`.
pub type Statistics = BTreeMap<(Rational, Rational), EigenStats>;

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::Decomposition("coefficient too large for root search".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Ok(out)
}

fn eval_poly(p: &[Rational], t: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

/// Synthetic division by `(t - r)`.
fn deflate(p: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = p.len() - 1;
    let mut q = alloc::vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + &carry * r;
        q[i] = carry.clone();
    }
    q
}

/// Rational roots of a polynomial (coefficients low degree first).
fn rational_roots(p: &[Rational]) -> Result<(Vec<Rational>, usize)> {
    let mut p: Vec<Rational> = p.to_vec();
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
    }
    if p.len() <= 1 {
        return Ok((roots, 0));
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let num = divisors(&ints[0])?;
    let den = divisors(ints.last().expect("nonempty"))?;
    for a in &num {
        for b in &den {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(*a) * s, BigInt::from(*b));
                if roots.contains(&r) {
                    continue;
                }
                if eval_poly(&p, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    for r in &roots {
        if r.is_zero() {
            continue;
        }
        while p.len() > 1 && eval_poly(&p, r).is_zero() {
            p = deflate(&p, r);
        }
    }
    Ok((roots, p.len() - 1))
}

/// Distinct eigenvalues of a matrix that is diagonalisable over `Q`.
pub fn semisimple_eigenvalues(m: &QMatrix, name: &str) -> Result<Vec<Rational>> {
    let n = m.rows();
    let mut values: Vec<Rational> = if m.is_upper_triangular() {
        let mut d = m.diag();
        d.sort();
        d.dedup();
        d
    } else {
        let (roots, leftover) = rational_roots(&m.charpoly())?;
        if leftover > 0 {
            return Err(Error::NotSemisimple(format!("{name} has irrational eigenvalues")));
        }
        roots
    };
    values.sort();
    let total: usize = values
        .iter()
        .map(|v| n - m.sub(&QMatrix::identity(n).scale(v)).rank())
        .sum();
    if total != n {
        return Err(Error::NotSemisimple(format!("{name} does not act semisimply")));
    }
    Ok(values)
}

fn restricted_rank(op: &QMatrix, basis: &QMatrix) -> usize {
    op.mul(basis).rank()
}

/// Eigenspace statistics of a module.
pub fn statistics(m: &Gl11MatrixModule) -> Result<Statistics> {
    let d = m.dim();
    let id = QMatrix::identity(d);
    let e_op = m.action(Basis::E);
    let n_op = m.action(Basis::N);
    let es = semisimple_eigenvalues(e_op, "E")?;
    let ns = semisimple_eigenvalues(n_op, "N")?;
    let pp = m.action(Basis::PsiPlus);
    let pm = m.action(Basis::PsiMinus);
    let ppm = pp.mul(pm);
    let mut stats = Statistics::new();
    let mut covered = 0;
    for e in &es {
        let ee = e_op.sub(&id.scale(e));
        for n in &ns {
            let basis = ee.vstack(&n_op.sub(&id.scale(n))).nullspace();
            if basis.cols() == 0 {
                continue;
            }
            covered += basis.cols();
            stats.insert(
                (e.clone(), n.clone()),
                EigenStats {
                    dim: basis.cols(),
                    rank_psi_plus: restricted_rank(pp, &basis),
                    rank_psi_minus: restricted_rank(pm, &basis),
                    rank_psi_plus_minus: restricted_rank(&ppm, &basis),
                },
            );
        }
    }
    if covered != d {
        return Err(Error::NotSemisimple("joint (E, N) eigenspaces do not span".into()));
    }
    Ok(stats)
}

fn stats_of_labels(labels: &[FinLabel]) -> Statistics {
    let mut out = Statistics::new();
    for l in labels {
        for (k, v) in statistics(&realize(l)).expect("basic modules are semisimple") {
            out.entry(k).or_default().add(&v);
        }
    }
    out
}

/// Decompose a module into Verma, atypical and projective summands.
///
/// Fails on non-semisimple `E`/`N` or when no multiset of basic modules
/// reproduces the eigenspace statistics.
pub fn decompose(m: &Gl11MatrixModule) -> Result<Vec<FinLabel>> {
    let stats = statistics(m)?;
    let mut out = Vec::new();
    let get = |e: &Rational, n: &Rational| stats.get(&(e.clone(), n.clone())).copied().unwrap_or_default();

    // e != 0: each Verma(n, e) owns one vector at N = n + 1/2 killed by ψ⁺.
    for ((e, n), s) in &stats {
        if !e.is_zero() {
            for _ in 0..(s.dim - s.rank_psi_plus) {
                out.push(FinLabel::verma(n - half(), e.clone()));
            }
        }
    }

    // e = 0: projectives first, then Vermas from the leftover ψ⁻ ranks, then atypicals.
    let zero = Rational::zero();
    let mut residual: BTreeMap<Rational, (i64, i64, i64)> = BTreeMap::new();
    for ((e, n), s) in &stats {
        if e.is_zero() {
            residual.insert(
                n.clone(),
                (s.dim as i64, s.rank_psi_plus as i64, s.rank_psi_minus as i64),
            );
        }
    }
    let ns: Vec<Rational> = residual.keys().cloned().collect();
    let one = Rational::one();
    for n in &ns {
        let count = get(&zero, n).rank_psi_plus_minus;
        for _ in 0..count {
            out.push(FinLabel::projective(n.clone()));
            // P_n: dims (n:2, n±1:1); ψ⁺ ranks (n:1, n-1:1); ψ⁻ ranks (n:1, n+1:1)
            for (shift, dd, rp, rm) in [(&zero, 2, 1, 1), (&one, 1, 0, 1), (&-one.clone(), 1, 1, 0)] {
                let slot = residual.entry(n + shift).or_insert((0, 0, 0));
                slot.0 -= dd;
                slot.1 -= rp;
                slot.2 -= rm;
            }
        }
    }
    let ns: Vec<Rational> = residual.keys().cloned().collect();
    for n in &ns {
        let vermas = residual[n].2;
        if vermas < 0 {
            return Err(Error::Decomposition("infeasible psi- statistics".into()));
        }
        for _ in 0..vermas {
            out.push(FinLabel::verma(n - half(), zero.clone()));
        }
        residual.get_mut(n).expect("present").0 -= vermas;
        residual.get_mut(n).expect("present").2 -= vermas;
        let low = residual.entry(n - &one).or_insert((0, 0, 0));
        low.0 -= vermas;
    }
    for (n, (dim, rp, rm)) in &residual {
        if *dim < 0 || *rp != 0 || *rm != 0 {
            return Err(Error::Decomposition(format!(
                "statistics at N = {n} match no sum of basic modules"
            )));
        }
        for _ in 0..*dim {
            out.push(FinLabel::atypical(n.clone()));
        }
    }

    out.sort();
    if stats_of_labels(&out) != stats {
        return Err(Error::Decomposition(
            "candidate decomposition does not reproduce the statistics".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::module::tensor;
    use crate::symbolic::rational::{int, rat};

    #[test]
    fn basic_modules_are_indecomposable() {
        for l in [
            FinLabel::verma(rat(1, 3), rat(2, 5)),
            FinLabel::verma(rat(-1, 2), int(0)),
            FinLabel::atypical(rat(7, 4)),
            FinLabel::projective(rat(-1, 2)),
        ] {
            assert_eq!(decompose(&realize(&l)).unwrap(), alloc::vec![l]);
        }
    }

    #[test]
    fn verma_products() {
        let v = realize(&FinLabel::verma(rat(1, 2), int(1)));
        let mut expected = alloc::vec![
            FinLabel::verma(rat(3, 2), int(2)),
            FinLabel::verma(rat(1, 2), int(2)),
        ];
        expected.sort();
        assert_eq!(decompose(&tensor(&v, &v)).unwrap(), expected);

        let (n, e) = (rat(2, 3), rat(-3, 4));
        let a = realize(&FinLabel::verma(n.clone(), e.clone()));
        let b = realize(&FinLabel::verma(-n, -e));
        assert_eq!(decompose(&tensor(&a, &b)).unwrap(), alloc::vec![FinLabel::projective(int(0))]);
    }

    #[test]
    fn rejects_non_semisimple() {
        let mut n = QMatrix::zeros(2, 2);
        n.set(0, 1, int(1));
        let z = QMatrix::zeros(2, 2);
        // N nilpotent: violates nothing in the bracket relations with zero ψ
        let m = Gl11MatrixModule::new(alloc::vec![false, false], n, z.clone(), z.clone(), z).unwrap();
        assert!(matches!(decompose(&m), Err(Error::NotSemisimple(_))));
    }

    #[test]
    fn rational_root_search() {
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let (mut roots, rest) = rational_roots(&[int(0), rat(-3, 2), rat(5, 2), int(1)]).unwrap();
        roots.sort();
        assert_eq!(roots, alloc::vec![int(-3), int(0), rat(1, 2)]);
        assert_eq!(rest, 0);
        let (_, rest) = rational_roots(&[int(-2), int(0), int(1)]).unwrap();
        assert_eq!(rest, 2);
    }
}

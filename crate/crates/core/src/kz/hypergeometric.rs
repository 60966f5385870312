//! Double-precision evaluation of `₂F₁(x, -x; 1; z)` and the residual of the
//! main ODE at its regular solution.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kz::system::{main_diff_eq, SecondOrderOde};
use crate::symbolic::rational::{is_integer, to_f64, Rational};

const MAX_TERMS: usize = 50_000_000;
const FIRST_ROW: usize = 32;
const MAX_LEVELS: usize = 16;

/// Parameters `(a, b, c)` of a Gauss hypergeometric function. Only the family
/// `(x, -x, 1)` is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeometricSpec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HypergeometricSpec {
    pub fn for_weight(x: &Rational) -> Result<Self> {
        if is_integer(x) {
            return Err(Error::InvalidInput(format!("x = {x} is an integer")));
        }
        Ok(HypergeometricSpec { a: x.clone(), b: -x, c: Rational::from_integer(1.into()) })
    }
}

/// Term `n + 1` from term `n` of `Σ (x)_n (-x)_n / (n!)² zⁿ`.
fn next_term(t: f64, x: f64, n: usize, z: f64) -> f64 {
    let m = n as f64;
    t * (m + x) * (m - x) / ((m + 1.0) * (m + 1.0)) * z
}

/// The first `count` terms of the series at `z`.
pub fn series_terms(x: f64, z: f64, count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    let mut t = 1.0;
    for n in 0..count {
        out.push(t);
        t = next_term(t, x, n, z);
    }
    out
}

fn partial_sum(x: f64, n_terms: usize) -> f64 {
    let mut s = 0.0;
    let mut t = 1.0;
    for n in 0..n_terms {
        s += t;
        t = next_term(t, x, n, 1.0);
    }
    s
}

/// Inside the unit disc: sum until `|next term| / (1 - |z|)` drops below `tol`.
/// Past `n ≥ |x|` consecutive term ratios are at most `|z|`, which makes this a
/// bound on the tail.
fn sum_inside(x: f64, z: f64, tol: f64) -> Result<f64> {
    let rho = libm::fabs(z);
    let mut s = 0.0;
    let mut t = 1.0;
    for n in 0..MAX_TERMS {
        s += t;
        t = next_term(t, x, n, z);
        if (n + 1) as f64 >= libm::fabs(x) && libm::fabs(t) / (1.0 - rho) < tol {
            return Ok(s + t);
        }
        if t == 0.0 {
            return Ok(s);
        }
    }
    Err(Error::Numeric(format!("series at z = {z} did not reach tolerance {tol}")))
}

/// At `z = 1` the terms behave like `C/n²`, so partial sums `S_N` have an
/// asymptotic expansion in powers of `1/N`. Richardson extrapolation over
/// `N = 32·2^j` removes one power per level.
fn sum_at_one(x: f64, tol: f64) -> Result<f64> {
    let mut table: Vec<Vec<f64>> = Vec::new();
    let mut best = f64::NAN;
    let mut best_err = f64::INFINITY;
    for level in 0..MAX_LEVELS {
        let mut row = alloc::vec![partial_sum(x, FIRST_ROW << level)];
        for j in 1..=level {
            let factor = libm::pow(2.0, j as f64);
            let prev = &table[level - 1];
            let v = (factor * row[j - 1] - prev[j - 1]) / (factor - 1.0);
            row.push(v);
        }
        if level > 0 {
            let err = libm::fabs(row[level] - table[level - 1][level - 1]);
            if err < best_err {
                best_err = err;
                best = row[level];
            }
            if err < tol {
                return Ok(row[level]);
            }
        }
        table.push(row);
    }
    if best_err < tol.max(1e-12) {
        Ok(best)
    } else {
        Err(Error::Numeric(format!(
            "extrapolation at z = 1 stalled at {best_err:e} above tolerance {tol:e}"
        )))
    }
}

/// `₂F₁(x, -x; 1; z)` for `|z| < 1` or `z = 1`.
pub fn hyp2f1(x: f64, z: f64, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 || !x.is_finite() || !z.is_finite() {
        return Err(Error::InvalidInput("non-finite argument or non-positive tolerance".into()));
    }
    if z == 1.0 {
        sum_at_one(x, tol)
    } else if libm::fabs(z) < 1.0 {
        sum_inside(x, z, tol)
    } else {
        Err(Error::InvalidInput(format!("series diverges at z = {z}")))
    }
}

/// `sin(πx)/(πx)`, with the value 1 at `x = 0`.
pub fn closed_form(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        let px = core::f64::consts::PI * x;
        libm::sin(px) / px
    }
}

/// `₂F₁(x, -x; 1; 1)` summed directly; nonzero exactly when `x ∉ ℤ`.
pub fn rigidity_constant(x: &Rational, tol: f64) -> Result<f64> {
    HypergeometricSpec::for_weight(x)?;
    hyp2f1(to_f64(x), 1.0, tol)
}

/// `F`, `F'`, `F''` of `₂F₁(x, -x; 1; z)` by term-wise differentiation, for `0 < z < 1`.
pub fn hyp2f1_with_derivatives(x: f64, z: f64) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    let mut t = 1.0;
    let mut zn = 1.0;
    for n in 0..MAX_TERMS {
        let m = n as f64;
        let c = t * zn;
        out[0] += c;
        out[1] += m * c / z;
        out[2] += m * (m - 1.0) * c / (z * z);
        t = next_term(t, x, n, 1.0);
        zn *= z;
        // once n ≥ |x| + 2, second-derivative terms shrink by at least z(n+2)/n per step
        if m >= libm::fabs(x) + 2.0 {
            let rho = z * (m + 2.0) / m;
            if rho < 1.0 {
                let next = (m + 1.0) * m * libm::fabs(t * zn) / (z * z);
                let scale = out.iter().fold(1.0f64, |a, v| a.max(libm::fabs(*v)));
                if next / (1.0 - rho) < 1e-17 * scale {
                    return Ok(out);
                }
            }
        }
        if t == 0.0 {
            return Ok(out);
        }
    }
    Err(Error::Numeric(format!("derivative series at z = {z} did not converge")))
}

/// Residual `|a₂φ'' + a₁φ' + a₀φ|` of `ode` at the regular solution
/// `φ = c · z^{-2Δ}(1-z)^{-2Δ} ₂F₁(x, -x; 1; z)`, with the constant `c` chosen
/// so that the prefactor equals 1 at the evaluation point. Without that
/// normalization the residual would scale with `z^{-2Δ}(1-z)^{-2Δ}`, which
/// for large `|Δ|` swamps double precision.
pub fn ode_residual_of(
    ode: &SecondOrderOde<Rational>,
    x: &Rational,
    delta: &Rational,
    z: f64,
) -> Result<f64> {
    let eps = 10.0 * f64::EPSILON;
    if !(z > eps && z < 1.0 - eps) {
        return Err(Error::InvalidInput(format!("z = {z} is not inside (0, 1)")));
    }
    let s = 2.0 * to_f64(delta);
    let [f, f1, f2] = hyp2f1_with_derivatives(to_f64(x), z)?;
    let w = -s / z + s / (1.0 - z);
    let w1 = s / (z * z) + s / ((1.0 - z) * (1.0 - z));
    let phi = f;
    let phi1 = f1 + w * f;
    let phi2 = f2 + 2.0 * w * f1 + (w1 + w * w) * f;
    let [a2, a1, a0] = ode.eval_f64(z);
    Ok(libm::fabs(a2 * phi2 + a1 * phi1 + a0 * phi))
}

/// [`ode_residual_of`] for the main ODE at `(Δ, x)`.
pub fn ode_residual(x: &Rational, delta: &Rational, z: f64) -> Result<f64> {
    ode_residual_of(&main_diff_eq().specialize(delta, x)?, x, delta, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::{int, rat};
    use core::f64::consts::PI;

    #[test]
    fn trivial_values() {
        assert_eq!(hyp2f1(0.3, 0.0, 1e-14).unwrap(), 1.0);
        for z in [0.0, 0.5, -0.9, 1.0] {
            assert_eq!(hyp2f1(0.0, z, 1e-14).unwrap(), 1.0);
        }
        assert!(hyp2f1(0.5, 1.5, 1e-10).is_err());
        assert!(hyp2f1(0.5, -1.0, 1e-10).is_err());
    }

    #[test]
    fn gauss_value() {
        let v = hyp2f1(0.5, 1.0, 1e-12).unwrap();
        assert!((v - 2.0 / PI).abs() < 1e-11, "{v}");
        assert!((closed_form(1.0 / 3.0) - 0.826_993_3).abs() < 1e-7);
        assert!(rigidity_constant(&int(2), 1e-10).is_err());
    }

    #[test]
    fn residual_small() {
        let r = ode_residual(&rat(1, 3), &rat(1, 5), 0.5).unwrap();
        assert!(r < 1e-10, "{r}");
        assert!(ode_residual(&rat(1, 3), &rat(1, 5), 1.0).is_err());
    }
}

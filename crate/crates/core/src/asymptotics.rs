//! Numerical asymptotics `a(n) ~ C * mu^n * n^theta` on the support of a
//! sequence, from exact terms.
//!
//! `mu^d` and `theta` are extrapolated in exact rational arithmetic from
//! consecutive ratios on the support (`d` the support period); `C` is
//! extrapolated from `a(n) / (mu^n n^theta)` evaluated with 256-bit floats in
//! the log domain. Extrapolation is Richardson's, assuming corrections in
//! integral powers of `1/n`.

use alloc::vec::Vec;

use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::guess::HolonomicRecurrence;

type Float = dashu_float::FBig<dashu_float::round::mode::HalfEven, 2>;

const PRECISION: usize = 256;
/// Richardson extrapolation depth.
pub const DEPTH: usize = 4;
/// Trailing window inspected for the support period.
pub const PERIOD_WINDOW: usize = 200;

/// Last extrapolation step for each quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deltas {
    pub mu: f64,
    pub theta: f64,
    pub c: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticEstimate {
    pub mu: f64,
    pub theta: f64,
    pub c: f64,
    /// Support is `n = residue (mod period)` over the checked window.
    pub period: usize,
    pub residue: usize,
    pub deltas: Deltas,
    /// Largest-modulus root of the characteristic polynomial, when it has one.
    pub dominant_root: Option<f64>,
    /// `mu` matches `dominant_root` within `max(delta, 1e-6 * mu)`.
    pub root_agrees: bool,
    /// All deltas are small relative to their quantities.
    pub reliable: bool,
}

impl AsymptoticEstimate {
    /// `a(n) ~ C * mu^n * n^theta (support: n = r mod d)`.
    pub fn render(&self) -> alloc::string::String {
        alloc::format!(
            "a(n) ~ {:.6} * {:.9}^n * n^{:.6} (support: n ≡ {} mod {}); deltas: mu {:.1e}, theta {:.1e}, C {:.1e}",
            self.c, self.mu, self.theta, self.residue, self.period, self.deltas.mu, self.deltas.theta, self.deltas.c
        )
    }
}

/// Smallest period of the zero pattern over the trailing window, and the
/// residue of the last nonzero term.
pub fn support_period(terms: &[Rational]) -> Option<(usize, usize)> {
    let start = terms.len().saturating_sub(PERIOD_WINDOW);
    let window: Vec<bool> = terms[start..].iter().map(|a| !a.is_zero()).collect();
    let last = window.iter().rposition(|&x| x)? + start;
    let d = (1..=window.len())
        .find(|&d| (0..window.len().saturating_sub(d)).all(|i| window[i] == window[i + d]))
        .unwrap_or(window.len());
    Some((d, last % d))
}

/// Richardson limit from equally spaced samples `(n_i, f_i)` with spacing
/// `h`, using all of them.
fn richardson(points: &[(Rational, Rational)], h: &Rational) -> Rational {
    let k = points.len() - 1;
    let mut fact = alloc::vec![Rational::one(); k + 1];
    for i in 1..=k {
        fact[i] = &fact[i - 1] * int(i as i64);
    }
    let mut acc = Rational::zero();
    for (i, (n, f)) in points.iter().enumerate() {
        let w = num_traits::pow(n / h, k) / (&fact[i] * &fact[k - i]);
        let term = w * f;
        if (k + i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Depth-`DEPTH` value and its difference from depth `DEPTH - 1`.
fn extrapolate(points: &[(Rational, Rational)], h: &Rational) -> (Rational, Rational) {
    let m = points.len();
    let hi = richardson(&points[m - DEPTH - 1..], h);
    let lo = richardson(&points[m - DEPTH..], h);
    let delta = (&hi - &lo).abs();
    (hi, delta)
}

fn to_ibig(x: &BigInt) -> IBig {
    let (sign, bytes) = x.to_bytes_le();
    // bytes are the magnitude, not two's complement
    let i = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -i
    } else {
        i
    }
}

fn to_float(x: &Rational) -> Float {
    let n = Float::from(to_ibig(x.numer())).with_precision(PRECISION).value();
    let d = Float::from(to_ibig(x.denom())).with_precision(PRECISION).value();
    n / d
}

fn float_richardson(points: &[(Rational, Float)], h: &Rational) -> Float {
    let k = points.len() - 1;
    let mut fact = alloc::vec![Rational::one(); k + 1];
    for i in 1..=k {
        fact[i] = &fact[i - 1] * int(i as i64);
    }
    let mut acc = Float::ZERO.with_precision(PRECISION).value();
    for (i, (n, f)) in points.iter().enumerate() {
        let mut w = num_traits::pow(n / h, k) / (&fact[i] * &fact[k - i]);
        if (k + i) % 2 == 1 {
            w = -w;
        }
        acc += to_float(&w) * f;
    }
    acc
}

/// Roots of `sum c_i x^i` by Durand-Kerner iteration.
fn polynomial_roots(c: &[f64]) -> Vec<Complex64> {
    let deg = c.iter().rposition(|&x| x != 0.0).unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    let lead = c[deg];
    let monic: Vec<f64> = c[..=deg].iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let bound = 1.0 + monic[..deg].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let denom = (0..deg)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (roots[i] - roots[j]));
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * bound {
            break;
        }
    }
    roots
}

/// `sum_i [n^D] c_i(n) x^i` with `D` the recurrence degree.
pub fn characteristic_polynomial(rec: &HolonomicRecurrence) -> Vec<Rational> {
    let deg = rec.degree();
    rec.coefficients().iter().map(|c| c.coeff(deg)).collect()
}

/// Estimate `C`, `mu`, `theta` from exact `terms` (at least a few hundred
/// recommended); `rec` supplies the characteristic-root cross-check.
pub fn estimate_asymptotics(rec: &HolonomicRecurrence, terms: &[Rational]) -> Result<AsymptoticEstimate> {
    let (period, residue) = support_period(terms).ok_or_else(|| Error::NonConvergent("sequence is eventually zero".into()))?;
    let support: Vec<(usize, &Rational)> = terms.iter().enumerate().skip(residue).step_by(period).collect();
    let needed = DEPTH + 3;
    if support.len() < needed + 1 {
        return Err(Error::InsufficientTerms { required: residue + period * (needed + 1), available: terms.len() });
    }
    let tail = &support[support.len() - needed - 1..];
    let sign_negative = tail[0].1.is_negative();
    if tail.iter().any(|(_, a)| a.is_zero() || a.is_negative() != sign_negative) {
        return Err(Error::NonConvergent("sign oscillates on the support".into()));
    }
    let h = int(period as i64);
    // a(n + d) / a(n) = mu^d (1 + d theta / n + ...)
    let ratios: Vec<(Rational, Rational)> = tail.windows(2).map(|w| (int(w[0].0 as i64), w[1].1 / w[0].1)).collect();
    let (mu_d, delta_mu_d) = extrapolate(&ratios, &h);
    if !mu_d.is_positive() {
        return Err(Error::NonConvergent("growth-rate estimate is not positive".into()));
    }
    let thetas: Vec<(Rational, Rational)> = ratios
        .iter()
        .map(|(n, r)| (n.clone(), n * (r / &mu_d - Rational::one()) / &h))
        .collect();
    let (theta, delta_theta) = extrapolate(&thetas, &h);

    // ln c_n = ln|a(n)| - (n/d) ln mu^d - theta ln n
    let ln_mu_d = to_float(&mu_d).ln();
    let theta_f = to_float(&theta);
    let cs: Vec<(Rational, Float)> = tail
        .iter()
        .map(|(n, a)| {
            let nf = to_float(&int(*n as i64));
            let l = to_float(&a.abs()).ln() - to_float(&(int(*n as i64) / &h)) * &ln_mu_d - &theta_f * nf.ln();
            (int(*n as i64), l.exp())
        })
        .collect();
    let m = cs.len();
    let c_hi = float_richardson(&cs[m - DEPTH - 1..], &h);
    let c_lo = float_richardson(&cs[m - DEPTH..], &h);
    let delta_c = (c_hi.clone() - c_lo).to_f64().value().abs();
    let mut c = c_hi.to_f64().value();
    if sign_negative {
        c = -c;
    }

    let mu_d_f = mu_d.to_f64().unwrap_or(f64::NAN);
    let mu = libm::pow(mu_d_f, 1.0 / period as f64);
    // d(mu^(1/d)) = mu / (d mu^d) d(mu^d)
    let delta_mu = mu / (period as f64 * mu_d_f) * delta_mu_d.to_f64().unwrap_or(f64::INFINITY);
    let deltas = Deltas { mu: delta_mu, theta: delta_theta.to_f64().unwrap_or(f64::INFINITY), c: delta_c };

    let chi: Vec<f64> = characteristic_polynomial(rec).iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let dominant_root = polynomial_roots(&chi).into_iter().map(|z| z.norm()).reduce(f64::max);
    let root_agrees = dominant_root.is_some_and(|r| (r - mu).abs() <= deltas.mu.max(1e-6 * mu));
    let reliable = deltas.mu <= 1e-8 * mu && deltas.theta <= 1e-3 && deltas.c <= 1e-3 * c.abs() && c.is_finite();
    Ok(AsymptoticEstimate { mu, theta: theta.to_f64().unwrap_or(f64::NAN), c, period, residue, deltas, dominant_root, root_agrees, reliable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{UniPoly, Var};
    use crate::holonomic::extend_sequence;

    fn rec(c: &[&[i64]]) -> HolonomicRecurrence {
        HolonomicRecurrence::new(c.iter().map(|p| UniPoly::from_ints(p, Var::N)).collect()).unwrap()
    }

    #[test]
    fn central_binomial() {
        let r = rec(&[&[-4, -4], &[], &[2, 1]]);
        let terms = extend_sequence(&r, &[int(1), int(0)], 1999).unwrap();
        let est = estimate_asymptotics(&r, &terms).unwrap();
        assert_eq!((est.period, est.residue), (2, 0));
        assert!((est.mu - 2.0).abs() < 1e-6, "{est:?}");
        assert!((est.theta + 0.5).abs() < 1e-3, "{est:?}");
        let c = libm::sqrt(2.0 / core::f64::consts::PI);
        assert!((est.c - c).abs() < 0.01 * c, "{est:?}");
        assert!(est.root_agrees && est.reliable, "{est:?}");
    }

    #[test]
    fn pure_power() {
        let r = rec(&[&[-3], &[1]]);
        let terms = extend_sequence(&r, &[int(1)], 400).unwrap();
        let est = estimate_asymptotics(&r, &terms).unwrap();
        assert_eq!(est.period, 1);
        assert!((est.mu - 3.0).abs() < 1e-12);
        assert!(est.theta.abs() < 1e-9);
        assert!((est.c - 1.0).abs() < 1e-9);
    }

    #[test]
    fn oscillating_sign_is_not_fabricated() {
        let r = rec(&[&[2], &[1]]);
        let terms = extend_sequence(&r, &[int(1)], 300).unwrap();
        assert!(matches!(estimate_asymptotics(&r, &terms), Err(Error::NonConvergent(_))));
    }

    #[test]
    fn roots_of_simple_polynomials() {
        let mut r: Vec<f64> = polynomial_roots(&[-4.0, 0.0, 1.0]).iter().map(|z| z.re).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((r[0] + 2.0).abs() < 1e-12 && (r[1] - 2.0).abs() < 1e-12);
    }
}

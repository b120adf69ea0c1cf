//! Linear differential equations and recurrences: the algebraic-to-ODE
//! derivation, the ODE-to-recurrence transfer, and exact sequence extension.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{int, nullspace_in, Domain, Rational, UniFrac, UniPoly, Var};
use crate::error::{Error, Result};
use crate::guess::{render_combination, AlgebraicEquation, HolonomicRecurrence};

/// `sum_i q_i(t) P^(i)(t) = g(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearODE {
    coefficients: Vec<UniPoly>,
    inhomogeneous: UniPoly,
}

impl LinearODE {
    /// Trims vanishing top coefficients and normalizes: integral, primitive,
    /// lowest nonzero coefficient of `q_order` positive.
    pub fn new(coefficients: Vec<UniPoly>, inhomogeneous: UniPoly) -> Result<Self> {
        let mut c = coefficients;
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        if c.is_empty() {
            return Err(Error::Degenerate("zero differential operator".into()));
        }
        if c.iter().chain([&inhomogeneous]).any(|p| p.var() != Var::T) {
            return Err(Error::Usage("ODE coefficients are polynomials in t".into()));
        }
        let all: Vec<Rational> = c.iter().chain([&inhomogeneous]).flat_map(|p| p.coeffs().iter().cloned()).collect();
        let den = crate::arith::common_denominator(&all);
        let ints: Vec<_> = all.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut factor = Rational::new(den, crate::arith::integer_content(&ints));
        let top = c.last().unwrap();
        if top.coeffs().iter().find(|x| !x.is_zero()).unwrap().is_negative() {
            factor = -factor;
        }
        Ok(LinearODE {
            coefficients: c.iter().map(|p| p.scale(&factor)).collect(),
            inhomogeneous: inhomogeneous.scale(&factor),
        })
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[UniPoly] {
        &self.coefficients
    }

    pub fn inhomogeneous(&self) -> &UniPoly {
        &self.inhomogeneous
    }

    /// `sum_i q_i P^(i) - g` for the truncated series `P`, modulo
    /// `t^(len - order)` where every coefficient is determined by the terms.
    pub fn residual(&self, terms: &[Rational]) -> UniPoly {
        let len = terms.len().saturating_sub(self.order());
        let mut deriv = UniPoly::new(terms.to_vec(), Var::T);
        let mut acc = UniPoly::zero(Var::T);
        for q in &self.coefficients {
            acc = &acc + &q.mul_trunc(&deriv, len);
            deriv = deriv.derivative();
        }
        (&acc - &self.inhomogeneous).mul_trunc(&UniPoly::one(Var::T), len)
    }
}

/// Largest `M` with the ODE satisfied by the series through `t^M`; the best
/// possible value is `terms.len() - 1 - order`.
pub fn verify_ode(ode: &LinearODE, terms: &[Rational]) -> i64 {
    let r = ode.residual(terms);
    match r.coeffs().iter().position(|x| !x.is_zero()) {
        Some(k) => k as i64 - 1,
        None => terms.len() as i64 - 1 - ode.order() as i64,
    }
}

fn derivative_symbol(i: usize) -> String {
    match i {
        0 => "P".into(),
        1..=3 => alloc::format!("P{}", "'".repeat(i)),
        _ => alloc::format!("P^({i})"),
    }
}

impl fmt::Display for LinearODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(UniPoly, String)> = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .map(|(i, q)| (q.clone(), derivative_symbol(i)))
            .collect();
        write!(f, "{} = {}", render_combination(&items), self.inhomogeneous)
    }
}

/// Arithmetic in `Q(t)[P] / (Q)`, elements stored as coefficient vectors of
/// `P^0..P^(d-1)`.
struct Quotient {
    d: usize,
    /// `q_j / q_d` for `j < d`, so `P^d = -sum_j reducer[j] P^j`
    reducer: Vec<UniFrac>,
}

impl Quotient {
    /// Reduce a vector of any length to length `d`.
    fn reduce(&self, mut v: Vec<UniFrac>) -> Vec<UniFrac> {
        while v.len() > self.d {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = v.len() - self.d;
            for (j, r) in self.reducer.iter().enumerate() {
                v[base + j] = v[base + j].sub(&top.mul(r));
            }
        }
        v.resize(self.d, UniFrac::zero(Var::T));
        v
    }

    fn mul(&self, a: &[UniFrac], b: &[UniFrac]) -> Vec<UniFrac> {
        let mut out = vec![UniFrac::zero(Var::T); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(&x.mul(y));
                }
            }
        }
        self.reduce(out)
    }
}

/// Solve the square system `A x = b` over `Q(t)`; `None` when singular.
fn solve(mut a: Vec<Vec<UniFrac>>, mut b: Vec<UniFrac>) -> Option<Vec<UniFrac>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = a[c][c].inv();
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].mul(&inv);
            for k in c..n {
                let v = a[r][k].sub(&f.mul(&a[c][k]));
                a[r][k] = v;
            }
            b[r] = b[r].sub(&f.mul(&b[c]));
        }
    }
    Some((0..n).map(|i| b[i].div(&a[i][i])).collect())
}

/// Derive a linear ODE annihilating the power-series root of `eq`.
///
/// Works modulo `Q` over `Q(t)`: `P' = -Q_t / Q_P`, each further derivative
/// is reduced, and the first linear dependence among `P, P', P'', ...` gives
/// the operator. A dependence always appears by order `degP`, so the
/// inhomogeneous term is zero.
pub fn algebraic_to_ode(eq: &AlgebraicEquation) -> Result<LinearODE> {
    let q = eq.p_coefficients();
    let d = eq.deg_p();
    let lead = UniFrac::from_poly(q[d].clone());
    let ring = Quotient {
        d,
        reducer: q[..d].iter().map(|c| UniFrac::from_poly(c.clone()).div(&lead)).collect(),
    };
    let frac = |p: &UniPoly| UniFrac::from_poly(p.clone());
    let q_p: Vec<UniFrac> = (1..=d).map(|j| frac(&q[j].scale(&int(j as i64)))).collect();
    let q_t = ring.reduce(q.iter().map(|c| frac(&c.derivative())).collect());
    // columns: Q_P * P^k reduced, for k < d
    let mut p_pow = ring.reduce(vec![UniFrac::one(Var::T)]);
    let mut cols = Vec::with_capacity(d);
    for _ in 0..d {
        cols.push(ring.mul(&q_p, &p_pow));
        p_pow = ring.mul(&p_pow, &ring.reduce(vec![UniFrac::zero(Var::T), UniFrac::one(Var::T)]));
    }
    let a: Vec<Vec<UniFrac>> = (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let rhs: Vec<UniFrac> = q_t.iter().map(|x| x.neg()).collect();
    let dp = solve(a, rhs).ok_or_else(|| {
        Error::Degenerate("dQ/dP vanishes modulo Q; reduce Q to its square-free part first".into())
    })?;

    let derive = |y: &[UniFrac]| -> Vec<UniFrac> {
        let mut direct: Vec<UniFrac> = y.iter().map(|r| r.derivative()).collect();
        let chain: Vec<UniFrac> = (1..d).map(|j| y[j].mul(&UniFrac::constant(int(j as i64), Var::T))).collect();
        if !chain.is_empty() {
            let extra = ring.mul(&chain, &dp);
            for (x, e) in direct.iter_mut().zip(extra) {
                *x = x.add(&e);
            }
        }
        direct
    };

    let mut ys = vec![ring.reduce(vec![UniFrac::zero(Var::T), UniFrac::one(Var::T)])];
    if ys[0].iter().all(|x| x.is_zero()) {
        return Err(Error::Degenerate("the equation forces P = 0".into()));
    }
    loop {
        let next = derive(ys.last().unwrap());
        ys.push(next);
        if let Some(kernel) = dependence(&ys, &ring) {
            return LinearODE::new(kernel, UniPoly::zero(Var::T));
        }
        if ys.len() > d + 1 {
            // cannot happen: d + 1 vectors in a d-dimensional space
            return Err(Error::Degenerate("no linear dependence among derivatives".into()));
        }
    }
}

/// Polynomial kernel vector of the columns `ys`, if they are dependent.
fn dependence(ys: &[Vec<UniFrac>], ring: &Quotient) -> Option<Vec<UniPoly>> {
    let rows: Vec<Vec<UniPoly>> = (0..ring.d)
        .map(|r| {
            let l = ys.iter().fold(UniPoly::one(Var::T), |l, y| {
                let den = y[r].den();
                let g = UniPoly::gcd(&l, den);
                (&l * den).exact_div(&g).unwrap()
            });
            ys.iter().map(|y| (y[r].num() * &l).exact_div(y[r].den()).unwrap()).collect::<Vec<UniPoly>>()
        })
        .filter(|row: &Vec<UniPoly>| row.iter().any(|p| !p.is_zero()))
        .collect();
    let mut kernel = if rows.is_empty() {
        // every column is zero; only possible for the first derivative
        let mut v = vec![UniPoly::zero(Var::T); ys.len()];
        v[ys.len() - 1] = UniPoly::one(Var::T);
        vec![v]
    } else {
        nullspace_in(rows, ys.len())
    };
    kernel.sort_by_key(|v| v.iter().filter(|p| !p.is_zero()).count());
    let mut v = kernel.into_iter().next()?;
    UniPoly::normalize_vector(&mut v);
    Some(v)
}

/// Falling factorial `x (x-1) ... (x-i+1)` as a polynomial in `n`, with
/// `x = n + shift`.
fn falling(shift: i64, i: usize) -> UniPoly {
    (0..i).fold(UniPoly::one(Var::N), |acc, k| {
        &acc * &UniPoly::new(vec![int(shift - k as i64), int(1)], Var::N)
    })
}

/// Transfer `sum_i q_i(t) P^(i) = 0` to the recurrence on coefficients.
///
/// The coefficient of `t^n` in `t^j P^(i)` is `(n-j+i)_i a(n-j+i)` with a
/// falling factorial; terms are collected by shift `i - j` and reindexed so
/// the lowest shift becomes `a(n)`.
pub fn ode_to_recurrence(ode: &LinearODE) -> Result<HolonomicRecurrence> {
    if !ode.inhomogeneous().is_zero() {
        return Err(Error::Unsupported("inhomogeneous ODE".into()));
    }
    let mut by_shift: alloc::collections::BTreeMap<i64, UniPoly> = alloc::collections::BTreeMap::new();
    for (i, q) in ode.coefficients().iter().enumerate() {
        for (j, c) in q.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = i as i64 - j as i64;
            let term = falling(k, i).scale(c);
            let slot = by_shift.entry(k).or_insert_with(|| UniPoly::zero(Var::N));
            *slot = &*slot + &term;
        }
    }
    by_shift.retain(|_, p| !p.is_zero());
    let (&lo, _) = by_shift.iter().next().ok_or_else(|| Error::Degenerate("ODE annihilates every series".into()))?;
    let &hi = by_shift.keys().next_back().unwrap();
    let mut coeffs = vec![UniPoly::zero(Var::N); (hi - lo + 1) as usize];
    for (k, p) in by_shift {
        // reindex m = n + lo so shift `lo` lands on a(m)
        coeffs[(k - lo) as usize] = p.translate(&int(-lo));
    }
    HolonomicRecurrence::new(coeffs)
}

/// Extend `initial` to `a(0..=n_max)` with the recurrence. Supplied terms
/// win; a vanishing leading coefficient where no term is supplied is an
/// error.
pub fn extend_sequence(rec: &HolonomicRecurrence, initial: &[Rational], n_max: usize) -> Result<Vec<Rational>> {
    let d = rec.order();
    let mut out: Vec<Rational> = initial.iter().take(n_max + 1).cloned().collect();
    if out.len() < d.min(n_max + 1) {
        return Err(Error::InsufficientTerms { required: d, available: initial.len() });
    }
    let c = rec.coefficients();
    while out.len() <= n_max {
        let index = out.len();
        let n = index - d;
        let nn = int(n as i64);
        let lead = c[d].eval(&nn);
        if lead.is_zero() {
            return Err(Error::SingularExtension { n, index });
        }
        let mut acc = Rational::zero();
        for i in 0..d {
            if !out[n + i].is_zero() {
                acc += c[i].eval(&nn) * &out[n + i];
            }
        }
        out.push(-acc / lead);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guess::guess_algebraic;
    use num_traits::One;
    use alloc::format;

    fn central(n: usize) -> Vec<Rational> {
        (0..n)
            .map(|k| {
                if k % 2 == 1 {
                    return Rational::zero();
                }
                let m = k / 2;
                (1..=m).fold(Rational::one(), |c, i| c * int((m + i) as i64) / int(i as i64))
            })
            .collect()
    }

    fn eq(coeffs: &[&[i64]]) -> AlgebraicEquation {
        let c: Vec<UniPoly> = coeffs.iter().map(|c| UniPoly::from_ints(c, Var::T)).collect();
        AlgebraicEquation::from_p_coefficients(&c).unwrap()
    }

    #[test]
    fn rational_equation_ode() {
        let ode = algebraic_to_ode(&eq(&[&[-1], &[1, -2]])).unwrap();
        assert_eq!(format!("{ode}"), "(1-2*t)*P' - 2*P = 0");
        let rec = ode_to_recurrence(&ode).unwrap();
        assert_eq!(format!("{rec}"), "(n+1)*a(n+1) - (2*n+2)*a(n) = 0");
    }

    #[test]
    fn central_binomial_ode_and_recurrence() {
        let ode = algebraic_to_ode(&eq(&[&[-1], &[], &[1, 0, -4]])).unwrap();
        assert_eq!(format!("{ode}"), "(1-4*t^2)*P' - 4*t*P = 0");
        assert_eq!(verify_ode(&ode, &central(51)), 49);
        let rec = ode_to_recurrence(&ode).unwrap();
        assert_eq!(format!("{rec}"), "(n+2)*a(n+2) - (4*n+4)*a(n) = 0");
        let ext = extend_sequence(&rec, &[int(1), int(0)], 8).unwrap();
        assert_eq!(ext, [1, 0, 2, 0, 6, 0, 20, 0, 70].map(int).to_vec());
    }

    #[test]
    fn guessed_equation_ode_annihilates_series() {
        let terms = central(40);
        let e = guess_algebraic(&terms, 2, 2, 10).unwrap().unwrap();
        let ode = algebraic_to_ode(&e).unwrap();
        assert_eq!(verify_ode(&ode, &terms), 40 - 1 - ode.order() as i64);
    }

    #[test]
    fn repeated_root_is_degenerate() {
        // (P - 1)^2
        let r = algebraic_to_ode(&eq(&[&[1], &[-2], &[1]]));
        assert!(matches!(r, Err(Error::Degenerate(_))));
    }

    #[test]
    fn geometric_extension() {
        let rec = HolonomicRecurrence::new(vec![UniPoly::from_ints(&[-2], Var::N), UniPoly::from_ints(&[1], Var::N)]).unwrap();
        let ext = extend_sequence(&rec, &[int(1)], 5).unwrap();
        assert_eq!(ext, [1, 2, 4, 8, 16, 32].map(int).to_vec());
    }

    #[test]
    fn singular_extension_reports_n() {
        let rec = HolonomicRecurrence::new(vec![UniPoly::from_ints(&[-1], Var::N), UniPoly::from_ints(&[-3, 1], Var::N)]).unwrap();
        let r = extend_sequence(&rec, &[int(1), int(1)], 6);
        assert_eq!(r, Err(Error::SingularExtension { n: 3, index: 4 }));
        // supplying the missing term lets the extension pass the singular point
        let ok = extend_sequence(&rec, &[int(1), int(1), int(-1), int(1), int(5)], 6);
        assert!(ok.is_ok());
    }

    #[test]
    fn zero_coefficients_contribute_nothing() {
        let ode = LinearODE::new(
            vec![UniPoly::from_ints(&[-2], Var::T), UniPoly::zero(Var::T), UniPoly::from_ints(&[1, -2], Var::T)],
            UniPoly::zero(Var::T),
        )
        .unwrap();
        let rec = ode_to_recurrence(&ode).unwrap();
        assert_eq!(rec.order(), 2);
    }
}

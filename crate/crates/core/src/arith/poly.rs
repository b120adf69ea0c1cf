use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, integer_content, Rational};
use super::var::Var;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The zero polynomial has an empty coefficient list; otherwise the last
/// stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl UniPoly {
    pub fn zero(var: Var) -> Self {
        UniPoly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rational::one(), var)
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// `c * var^k`
    pub fn monomial(c: Rational, k: usize, var: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    /// `var + c`
    pub fn linear(c: Rational, var: Var) -> Self {
        Self::new(vec![c, Rational::one()], var)
    }

    pub fn new(coeffs: Vec<Rational>, var: Var) -> Self {
        let mut p = UniPoly { coeffs, var };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rational::int(c)).collect(), var)
    }

    pub fn from_bigints(coeffs: Vec<BigInt>, var: Var) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect(), var)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest-degree nonzero coefficient.
    pub fn trailing(&self) -> Option<&Rational> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Polynomial arithmetic with an indeterminate check.
    pub fn checked(&self, other: &UniPoly, op: PolyOp) -> Result<UniPoly> {
        if self.var != other.var {
            return Err(Error::MismatchedVars {
                left: self.var.to_string(),
                right: other.var.to_string(),
            });
        }
        Ok(match op {
            PolyOp::Add => self.add_impl(other, false),
            PolyOp::Sub => self.add_impl(other, true),
            PolyOp::Mul => self.mul_impl(other),
        })
    }

    fn same_var(&self, other: &UniPoly) {
        assert_eq!(
            self.var, other.var,
            "mismatched indeterminates {} and {}",
            self.var, other.var
        );
    }

    fn add_impl(&self, other: &UniPoly, negate: bool) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            out.push(match (a, b, negate) {
                (Some(a), Some(b), false) => a + b,
                (Some(a), Some(b), true) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), false) => b.clone(),
                (None, Some(b), true) => -b,
                (None, None, _) => Rational::zero(),
            });
        }
        UniPoly::new(out, self.var)
    }

    fn mul_impl(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::new(out, self.var)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect(), self.var)
    }

    /// Multiply by `var^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs, var: self.var }
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        UniPoly::new(coeffs, self.var)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    /// `p(var + shift)`
    pub fn translate(&self, shift: &Rational) -> UniPoly {
        let lin = UniPoly::new(alloc::vec![shift.clone(), Rational::one()], self.var);
        let mut out = UniPoly::zero(self.var);
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &UniPoly::constant(c.clone(), self.var);
        }
        out
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        self.same_var(d);
        let dl = d.leading().expect("division by zero polynomial").clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(self.var), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &dl;
            for (j, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[k - dd + j] -= &q * c;
                }
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (UniPoly::new(quot, self.var), UniPoly::new(rem, self.var))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Scale so that every coefficient is an integer with content one.
    /// Returns the scaled polynomial and the factor used.
    pub fn primitive(&self) -> (UniPoly, Rational) {
        if self.is_zero() {
            return (self.clone(), Rational::one());
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = integer_content(&ints);
        let factor = Rational::new(den, g);
        (self.scale(&factor), factor)
    }

    /// Integer coefficients, assuming they are integral.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    pub fn with_var(mut self, var: Var) -> UniPoly {
        self.var = var;
        self
    }

    /// Truncated product modulo `var^n`.
    pub fn mul_trunc(&self, other: &UniPoly, n: usize) -> UniPoly {
        self.same_var(other);
        let len = n.min((self.coeffs.len() + other.coeffs.len()).saturating_sub(1));
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::new(out, self.var)
    }

    /// Render with the given indeterminate name and compact signs
    /// (`1-4*t^2`, `4*n+4`).
    pub fn render(&self, descending: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut idx: Vec<usize> = (0..self.coeffs.len())
            .filter(|&k| !self.coeffs[k].is_zero())
            .collect();
        if descending {
            idx.reverse();
        }
        let mut out = String::new();
        for (pos, &k) in idx.iter().enumerate() {
            let c = &self.coeffs[k];
            let body = term_body(&c.abs(), k, &self.var.to_string());
            if c.is_negative() {
                out.push('-');
            } else if pos > 0 {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

fn term_body(abs: &Rational, k: usize, name: &str) -> String {
    let power = match k {
        0 => String::new(),
        1 => name.into(),
        _ => alloc::format!("{name}^{k}"),
    };
    if k == 0 {
        abs.to_string()
    } else if abs.is_one() {
        power
    } else {
        alloc::format!("{abs}*{power}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.var == Var::N))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.same_var(rhs);
        self.add_impl(rhs, false)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.same_var(rhs);
        self.add_impl(rhs, true)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.same_var(rhs);
        self.mul_impl(rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect(), var: self.var }
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn t(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, Var::T)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&t(&[1, 1]) * &t(&[1, -1]), t(&[1, 0, -1]));
    }

    #[test]
    fn additive_identity() {
        let p = t(&[3, 0, 2]);
        assert_eq!(&p + &UniPoly::zero(Var::T), p);
    }

    #[test]
    fn fibonacci_denominator() {
        let prod = t(&[1, -1, -1]).mul_trunc(&t(&[1, 1, 2, 3, 5]), 5);
        assert_eq!(prod, t(&[1]));
    }

    #[test]
    fn mismatched_vars_is_usage_error() {
        let a = t(&[1, 1]);
        let b = UniPoly::from_ints(&[1, 1], Var::N);
        assert!(matches!(a.checked(&b, PolyOp::Add), Err(Error::MismatchedVars { .. })));
        assert!(a.checked(&t(&[2]), PolyOp::Mul).is_ok());
    }

    #[test]
    fn division_and_gcd() {
        let a = &t(&[1, -1]) * &t(&[2, 1]);
        let b = &t(&[1, -1]) * &t(&[0, 3]);
        assert_eq!(UniPoly::gcd(&a, &b), t(&[-1, 1]));
        let (q, r) = t(&[1, 0, 0, 1]).div_rem(&t(&[1, 1]));
        assert_eq!(q, t(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn render_conventions() {
        assert_eq!(t(&[1, 0, -4]).to_string(), "1-4*t^2");
        assert_eq!(UniPoly::from_ints(&[4, 4], Var::N).to_string(), "4*n+4");
        assert_eq!(UniPoly::from_ints(&[2, 1], Var::N).to_string(), "n+2");
        assert_eq!(t(&[]).to_string(), "0");
        assert_eq!(t(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn primitive_normalizes_content() {
        let p = UniPoly::new(alloc::vec![crate::arith::frac(1, 2), int(3)], Var::T);
        let (q, _) = p.primitive();
        assert_eq!(q, t(&[1, 6]));
    }

    #[test]
    fn translate_matches_eval() {
        let p = t(&[3, -2, 5]);
        let q = p.translate(&int(2));
        for x in -3..4 {
            assert_eq!(q.eval_int(x), p.eval_int(x + 2));
        }
    }
}

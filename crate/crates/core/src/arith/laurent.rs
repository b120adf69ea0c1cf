use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::var::Var;

/// Laurent polynomial stored densely over its support window
/// `[low, low + coeffs.len())`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
    var: Var,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new(), var }
    }

    pub fn monomial(c: Rational, exp: i64, var: Var) -> Self {
        Self::new(exp, vec![c], var)
    }

    pub fn new(low: i64, coeffs: Vec<Rational>, var: Var) -> Self {
        let mut p = LaurentPoly { low, coeffs, var };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest exponent with a nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.is_zero()).then(|| (self.low, self.low + self.coeffs.len() as i64 - 1))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.low;
        if k < 0 {
            return Rational::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Sum of all coefficients, i.e. the value at `s = 1`.
    pub fn coefficient_sum(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }

    fn combine(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        assert_eq!(self.var, other.var, "mismatched indeterminates");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let mut out = vec![Rational::zero(); (high - low) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut out[(other.low - low) as usize + k];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        LaurentPoly::new(low, out, self.var)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.combine(other, true)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect(), var: self.var }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, other.var, "mismatched indeterminates");
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero(self.var);
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
        LaurentPoly::new(self.low + other.low, out, self.var)
    }

    /// Nonzero rational multiple of `s^0`, the only invertible elements
    /// admitted for series expansion.
    pub fn as_unit_constant(&self) -> Option<&Rational> {
        (self.low == 0 && self.coeffs.len() == 1).then(|| &self.coeffs[0])
    }
}

impl super::series::Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.var)
    }
    fn one_like(&self) -> Self {
        LaurentPoly::monomial(Rational::one(), 0, self.var)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.as_unit_constant()
            .map(|c| LaurentPoly::monomial(c.recip(), 0, self.var))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (pos, (e, c)) in self.terms().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if pos > 0 {
                out.push('+');
            }
            let abs = c.abs();
            let power = match e {
                0 => String::new(),
                1 => alloc::format!("{}", self.var),
                _ => alloc::format!("{}^{}", self.var, e),
            };
            if e == 0 {
                out.push_str(&alloc::format!("{abs}"));
            } else if abs.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&alloc::format!("{abs}*{power}"));
            }
        }
        f.write_str(&out)
    }
}

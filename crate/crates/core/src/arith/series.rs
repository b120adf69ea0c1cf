use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::var::Var;
use crate::error::{Error, Result};

/// Commutative ring operations needed by truncated power series.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, when `self` is a unit usable for expansion.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Power series truncated after `t^order`; always holds `order + 1`
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
    var: Var,
}

impl<C: Ring> TruncSeries<C> {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<C>, var: Var) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncSeries { coeffs, var }
    }

    /// Pad or cut `coeffs` to exactly `order + 1` entries, using `zero` for padding.
    pub fn from_prefix(mut coeffs: Vec<C>, order: usize, zero: &C, var: Var) -> Self {
        coeffs.resize(order + 1, zero.zero_like());
        TruncSeries { coeffs, var }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Product truncated to the smaller of the two orders. Zero
    /// coefficients are skipped, so sparse factors multiply cheaply.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var, "mismatched indeterminates");
        let len = self.coeffs.len().min(other.coeffs.len());
        let zero = self.coeffs[0].zero_like();
        let mut out: Vec<C> = (0..len).map(|_| zero.clone()).collect();
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TruncSeries { coeffs: out, var: self.var }
    }

    /// Reciprocal to the same order.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::SingularExpansion)?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        // positions of nonzero coefficients past the constant term
        let support: Vec<usize> = (1..self.coeffs.len())
            .filter(|&k| !self.coeffs[k].is_zero())
            .collect();
        for n in 1..self.coeffs.len() {
            let mut acc = inv0.zero_like();
            for &k in support.iter().take_while(|&&k| k <= n) {
                let b = &out[n - k];
                if !b.is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(b));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(TruncSeries { coeffs: out, var: self.var })
    }
}

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::multi::MultiPoly;
use super::rational::Rational;
use super::var::Var;
use crate::error::{Error, Result};

/// Quotient of multivariate polynomials whose denominator has a nonzero
/// constant term, so it expands as a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    numerator: MultiPoly,
    denominator: MultiPoly,
}

impl RatFunc {
    pub fn new(numerator: MultiPoly, denominator: MultiPoly) -> Result<Self> {
        if numerator.vars() != denominator.vars() {
            return Err(Error::Usage("numerator and denominator use different indeterminates".into()));
        }
        if denominator.constant_term().is_zero() {
            return Err(Error::SingularExpansion);
        }
        Ok(RatFunc { numerator, denominator })
    }

    /// Rescale so the denominator's constant term is exactly one.
    pub fn normalized(self) -> Self {
        let c = self.denominator.constant_term();
        if c.is_one() {
            return self;
        }
        let inv = c.recip();
        RatFunc {
            numerator: self.numerator.scale(&inv),
            denominator: self.denominator.scale(&inv),
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.denominator
    }

    pub fn vars(&self) -> &[Var] {
        self.numerator.vars()
    }

    /// Power-series coefficients in `vars[main]` after evaluating every other
    /// indeterminate at the given values.
    pub fn expand_at(&self, main: usize, values: &[Rational], order: usize) -> Result<Vec<Rational>> {
        use super::series::TruncSeries;
        let var = self.vars()[main];
        let zero = Rational::zero();
        let num = self.numerator.eval_except(main, values).into_coeffs();
        let den = self.denominator.eval_except(main, values).into_coeffs();
        let num = TruncSeries::from_prefix(num, order, &zero, var);
        let den = TruncSeries::from_prefix(den, order, &zero, var);
        Ok(num.mul(&den.invert()?).into_coeffs())
    }
}

use core::fmt;

use num_traits::One;

use super::poly::UniPoly;
use super::rational::Rational;
use super::var::Var;

/// Element of the univariate rational function field: reduced quotient with a
/// monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFrac {
    num: UniPoly,
    den: UniPoly,
}

impl UniFrac {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero(num.var());
        }
        let g = UniPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading().unwrap().recip();
        num = num.scale(&lc);
        den = den.scale(&lc);
        UniFrac { num, den }
    }

    pub fn zero(var: Var) -> Self {
        UniFrac { num: UniPoly::zero(var), den: UniPoly::one(var) }
    }

    pub fn one(var: Var) -> Self {
        UniFrac { num: UniPoly::one(var), den: UniPoly::one(var) }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var();
        UniFrac { num: p, den: UniPoly::one(var) }
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::from_poly(UniPoly::constant(c, var))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return UniFrac::new(&self.num + &o.num, self.den.clone());
        }
        UniFrac::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UniFrac { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniFrac::zero(self.num.var());
        }
        UniFrac::new(&self.num * &o.num, &self.den * &o.den)
    }

    /// Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        UniFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        UniFrac::new(top, &self.den * &self.den)
    }

    pub fn is_one(&self) -> bool {
        self.num.is_constant() && self.den.is_constant() && self.num.coeff(0).is_one()
    }
}

impl fmt::Display for UniFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

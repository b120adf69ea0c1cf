use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::{PolyOp, UniPoly};
use super::rational::Rational;
use super::var::Var;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial: exponent vector (one slot per
/// indeterminate) to nonzero rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Graded order: total degree first, then lexicographic on exponents.
pub(crate) fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    pub fn zero(vars: Vec<Var>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational, vars: Vec<Var>) -> Self {
        let n = vars.len();
        Self::monomial(c, vec![0; n], vars)
    }

    pub fn one(vars: Vec<Var>) -> Self {
        Self::constant(Rational::one(), vars)
    }

    pub fn monomial(c: Rational, exps: Vec<u32>, vars: Vec<Var>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The `idx`-th indeterminate as a polynomial.
    pub fn variable(idx: usize, vars: Vec<Var>) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(Rational::one(), e, vars)
    }

    pub fn from_terms(vars: Vec<Var>, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var_index(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|&x| x == v)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the canonical graded order.
    pub fn terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_cmp(a.0, b.0));
        v
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Leading term under the graded order.
    pub fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by(|a, b| graded_cmp(a.0, b.0))
    }

    pub fn checked(&self, other: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
        if self.vars != other.vars {
            return Err(Error::MismatchedVars {
                left: render_vars(&self.vars),
                right: render_vars(&other.vars),
            });
        }
        Ok(match op {
            PolyOp::Add => self.add(other),
            PolyOp::Sub => self.sub(other),
            PolyOp::Mul => self.mul(other),
        })
    }

    fn assert_vars(&self, other: &MultiPoly) {
        assert_eq!(self.vars, other.vars, "mismatched indeterminates");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_vars(other);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.vars.clone());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitute rational values for every indeterminate except `keep`,
    /// giving a univariate polynomial in `keep`.
    pub fn eval_except(&self, keep: usize, values: &[Rational]) -> UniPoly {
        assert_eq!(values.len(), self.vars.len());
        let deg = self.degree_in(keep).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if i != keep && k > 0 {
                    v *= num_traits::pow(values[i].clone(), k as usize);
                }
            }
            coeffs[e[keep] as usize] += v;
        }
        UniPoly::new(coeffs, self.vars[keep])
    }

    /// Coefficients in `vars[main]`, each a Laurent polynomial in `target`
    /// obtained by the monomial map `vars[i] -> target^{weights[i]}` on all
    /// other indeterminates. Index `k` of the result is the coefficient of
    /// `vars[main]^k`.
    pub fn specialize_laurent(&self, main: usize, weights: &[i64], target: Var) -> Vec<LaurentPoly> {
        assert_eq!(weights.len(), self.vars.len());
        let deg = self.degree_in(main).unwrap_or(0) as usize;
        let mut out = vec![LaurentPoly::zero(target); deg + 1];
        for (e, c) in &self.terms {
            let exp: i64 = e
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != main)
                .map(|(i, &k)| weights[i] * k as i64)
                .sum();
            let k = e[main] as usize;
            out[k] = out[k].add(&LaurentPoly::monomial(c.clone(), exp, target));
        }
        out
    }

    /// Coefficients with respect to `vars[idx]`, as polynomials in the same
    /// indeterminates (the `idx` exponent zeroed).
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.vars.clone()); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[idx] as usize;
            e2[idx] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Parse the canonical text form produced by `Display`, e.g.
    /// `1 - 2*t + 1*t^2*z1`.
    pub fn parse(text: &str, vars: Vec<Var>) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(vars);
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut i = 0;
        let mut sign = 1i32;
        while i < tokens.len() {
            let tok = tokens[i];
            if tok == "+" || tok == "-" {
                if i == 0 || i + 1 >= tokens.len() {
                    return Err(Error::Parse(alloc::format!("dangling operator in {text:?}")));
                }
                sign = if tok == "-" { -1 } else { 1 };
                i += 1;
                continue;
            }
            let (e, mut c) = out.parse_term(tok)?;
            if sign < 0 {
                c = -c;
            }
            out.add_term(e, c);
            sign = 1;
            i += 1;
        }
        Ok(out)
    }

    fn parse_term(&self, tok: &str) -> Result<(Vec<u32>, Rational)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = Rational::one();
        for (k, factor) in tok.split('*').enumerate() {
            if k == 0 {
                if let Some(c) = parse_rational(factor) {
                    coeff = c;
                    continue;
                }
            }
            let (name, pow) = match factor.split_once('^') {
                Some((n, p)) => (n, p.parse::<u32>().map_err(|_| Error::Parse(factor.to_string()))?),
                None => (factor, 1),
            };
            let (neg, name) = match name.strip_prefix('-') {
                Some(rest) if k == 0 => (true, rest),
                _ => (false, name),
            };
            let var = Var::parse(name).ok_or_else(|| Error::Parse(alloc::format!("unknown indeterminate {name:?}")))?;
            let idx = self
                .var_index(var)
                .ok_or_else(|| Error::Parse(alloc::format!("indeterminate {name:?} not declared")))?;
            exps[idx] += pow;
            if neg {
                coeff = -coeff;
            }
        }
        Ok((exps, coeff))
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    (!d.is_zero()).then(|| Rational::new(n, d))
}

fn render_vars(vars: &[Var]) -> String {
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    names.join(",")
}

impl fmt::Display for MultiPoly {
    /// Canonical sparse-term text: graded order, explicit coefficients,
    /// spaced signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (pos, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}", c.abs())?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", self.vars[i])?,
                    _ => write!(f, "*{}^{}", self.vars[i], k)?,
                }
            }
        }
        Ok(())
    }
}

impl super::series::Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars.clone())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        MultiPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        MultiPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        MultiPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.constant_term();
        (self.terms.len() == 1 && !Zero::is_zero(&c)).then(|| MultiPoly::constant(c.recip(), self.vars.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    fn vars() -> Vec<Var> {
        vec![Var::T, Var::Z(1)]
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = MultiPoly::from_terms(
            vars(),
            [(vec![0, 0], int(1)), (vec![1, 0], int(-2)), (vec![2, 1], int(1))],
        );
        let text = alloc::format!("{p}");
        assert_eq!(text, "1 - 2*t + 1*t^2*z1");
        assert_eq!(MultiPoly::parse(&text, vars()).unwrap(), p);
    }

    #[test]
    fn parse_rejects_unknown_names() {
        assert!(MultiPoly::parse("1 + 2*q", vars()).is_err());
        assert!(MultiPoly::parse("", vars()).is_err());
    }

    #[test]
    fn specialize_to_laurent() {
        // 1 - t*z1 + t*z2 with z1 -> s, z2 -> s^-1
        let vs = vec![Var::T, Var::Z(1), Var::Z(2)];
        let p = MultiPoly::from_terms(
            vs,
            [(vec![0, 0, 0], int(1)), (vec![1, 1, 0], int(-1)), (vec![1, 0, 1], int(1))],
        );
        let l = p.specialize_laurent(0, &[0, 1, -1], Var::S);
        assert_eq!(l.len(), 2);
        assert_eq!(l[1].coeff(1), int(-1));
        assert_eq!(l[1].coeff(-1), int(1));
    }

    #[test]
    fn mismatched_vars() {
        let a = MultiPoly::one(vars());
        let b = MultiPoly::one(vec![Var::T]);
        assert!(a.checked(&b, PolyOp::Mul).is_err());
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|ts| {
            MultiPoly::from_terms(vars(), ts.into_iter().map(|((a, b), c)| (vec![a, b], int(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn display_parse_round_trip(a in small_poly()) {
            let text = alloc::format!("{a}");
            prop_assert_eq!(MultiPoly::parse(&text, vars()).unwrap(), a);
        }
    }
}

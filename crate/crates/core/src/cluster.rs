//! Weight-enumerator of all words by length and pattern occurrences, via the
//! Goulden-Jackson cluster method.
//!
//! With `t` marking length and `z_u` marking occurrences of pattern `u`, the
//! cluster generating functions satisfy the linear system
//!
//! ```text
//! C_u = (z_u - 1) * ( t^|p_u| + sum_v sum_{l in overlaps(v, u)} t^(|p_u| - l) * C_v )
//! ```
//!
//! and the enumerator is `1 / (1 - m t - sum_u C_u)`. Writing the system as
//! `M C = b`, the matrix determinant lemma gives
//! `sum_u C_u = 1 - det(M - b 1^T) / det(M)`, hence
//! `F = det(M) / (det(M - b 1^T) - m t det(M))`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::arith::{int, MultiPoly, RatFunc, Rational, TruncSeries, Var};
use crate::error::{Error, Result};
use crate::words::{InstanceSpec, Word};

/// Overlap lengths from pattern `source` into pattern `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapSet {
    pub source: usize,
    pub target: usize,
    pub lengths: Vec<usize>,
}

/// Lengths `l` with `1 <= l < |pu|`, `l <= |pv|` such that the length-`l`
/// suffix of `pv` equals the length-`l` prefix of `pu`.
pub fn overlaps(pv: &Word, pu: &Word) -> Vec<usize> {
    let (v, u) = (pv.letters(), pu.letters());
    (1..u.len().min(v.len() + 1))
        .filter(|&l| v[v.len() - l..] == u[..l])
        .collect()
}

/// All overlap sets between ordered pairs of patterns.
pub fn overlap_table(patterns: &[Word]) -> Vec<OverlapSet> {
    let mut out = Vec::new();
    for (v, pv) in patterns.iter().enumerate() {
        for (u, pu) in patterns.iter().enumerate() {
            out.push(OverlapSet { source: v, target: u, lengths: overlaps(pv, pu) });
        }
    }
    out
}

/// `F(t; z_1..z_s)` together with the instance it enumerates. Indeterminates
/// are ordered `t, z1, ..., zs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    value: RatFunc,
    spec: InstanceSpec,
}

impl WeightEnumerator {
    /// Reassemble from stored parts. The denominator must have constant term 1.
    pub fn from_parts(spec: InstanceSpec, numerator: MultiPoly, denominator: MultiPoly) -> Result<Self> {
        let expected = enumerator_vars(spec.patterns().len());
        if numerator.vars() != expected.as_slice() {
            return Err(Error::Usage("enumerator indeterminates must be t, z1..zs".into()));
        }
        let value = RatFunc::new(numerator, denominator)?;
        if !value.denominator().constant_term().is_one() {
            return Err(Error::Usage("enumerator denominator must have constant term 1".into()));
        }
        Ok(WeightEnumerator { value, spec })
    }

    pub fn value(&self) -> &RatFunc {
        &self.value
    }

    pub fn spec(&self) -> &InstanceSpec {
        &self.spec
    }

    pub fn numerator(&self) -> &MultiPoly {
        self.value.numerator()
    }

    pub fn denominator(&self) -> &MultiPoly {
        self.value.denominator()
    }

    /// Coefficients of `t^0..=t^order`, each a polynomial in the `z`
    /// indeterminates whose monomial `z^e` counts words with occurrence
    /// vector `e`.
    pub fn refined_series(&self, order: usize) -> Result<Vec<MultiPoly>> {
        let zero = MultiPoly::zero(self.value.vars().to_vec());
        let num = TruncSeries::from_prefix(self.numerator().coefficients_in(0), order, &zero, Var::T);
        let den = TruncSeries::from_prefix(self.denominator().coefficients_in(0), order, &zero, Var::T);
        Ok(num.mul(&den.invert()?).into_coeffs())
    }

    /// Series in `t` with every `z_i = 1`.
    pub fn expand_at_ones(&self, order: usize) -> Result<Vec<Rational>> {
        let values = vec![Rational::one(); self.value.vars().len()];
        self.value.expand_at(0, &values, order)
    }
}

pub(crate) fn enumerator_vars(s: usize) -> Vec<Var> {
    core::iter::once(Var::T).chain((1..=s).map(|i| Var::Z(i as u16))).collect()
}

fn det(m: &[Vec<MultiPoly>], vars: &[Var]) -> MultiPoly {
    fn rec(m: &[Vec<MultiPoly>], row: usize, used: &mut Vec<bool>, vars: &[Var]) -> MultiPoly {
        let n = m.len();
        if row == n {
            return MultiPoly::one(vars.to_vec());
        }
        let mut acc = MultiPoly::zero(vars.to_vec());
        let mut sign = true;
        for c in 0..n {
            if used[c] {
                continue;
            }
            if !m[row][c].is_zero() {
                used[c] = true;
                let minor = rec(m, row + 1, used, vars);
                used[c] = false;
                let term = m[row][c].mul(&minor);
                acc = if sign { acc.add(&term) } else { acc.sub(&term) };
            }
            sign = !sign;
        }
        acc
    }
    rec(m, 0, &mut vec![false; m.len()], vars)
}

/// Build the weight-enumerator of an instance by the cluster method.
///
/// The determinant is expanded by minors, which is fine for the handful of
/// patterns this is meant for. Instances where one pattern is a factor of
/// another are rejected as unsupported.
pub fn build_enumerator(spec: &InstanceSpec) -> Result<WeightEnumerator> {
    if let Some((i, j)) = spec.factor_containment() {
        return Err(Error::Unsupported(alloc::format!(
            "pattern {} is a factor of pattern {}",
            spec.render_pattern(i),
            spec.render_pattern(j)
        )));
    }
    let pats = spec.patterns();
    let s = pats.len();
    let vars = enumerator_vars(s);
    let t_pow = |k: usize| {
        let mut e = vec![0u32; s + 1];
        e[0] = k as u32;
        MultiPoly::monomial(Rational::one(), e, vars.clone())
    };
    let marker = |u: usize| MultiPoly::variable(u + 1, vars.clone()).sub(&MultiPoly::one(vars.clone()));

    // M = I - A with A[u][v] = (z_u - 1) sum_l t^(|p_u| - l); b_u = (z_u - 1) t^|p_u|
    let mut mat = vec![vec![MultiPoly::zero(vars.clone()); s]; s];
    let mut rhs = Vec::with_capacity(s);
    for u in 0..s {
        let zu = marker(u);
        for v in 0..s {
            let mut sum = MultiPoly::zero(vars.clone());
            for l in overlaps(&pats[v], &pats[u]) {
                sum = sum.add(&t_pow(pats[u].len() - l));
            }
            let a = zu.mul(&sum);
            mat[u][v] = if u == v { MultiPoly::one(vars.clone()).sub(&a) } else { a.neg() };
        }
        rhs.push(zu.mul(&t_pow(pats[u].len())));
    }
    let det_m = det(&mat, &vars);
    let shifted: Vec<Vec<MultiPoly>> = mat
        .iter()
        .zip(&rhs)
        .map(|(row, b)| row.iter().map(|x| x.sub(b)).collect())
        .collect();
    let det_shifted = det(&shifted, &vars);
    let mt = t_pow(1).scale(&int(spec.alphabet_size() as i64));
    let denominator = det_shifted.sub(&mt.mul(&det_m));
    let value = RatFunc::new(det_m, denominator)?.normalized();
    Ok(WeightEnumerator { value, spec: spec.clone() })
}

//! Constant-term extraction: substitute `z_i -> s^{c_i}` into the
//! weight-enumerator, expand in `t` over Laurent polynomials in `s`, and read
//! off the coefficient of `s^r` at every order.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Signed;

use crate::arith::{LaurentPoly, Rational, TruncSeries, Var};
use crate::cluster::WeightEnumerator;
use crate::error::{Error, Result};
use crate::words::InstanceSpec;

/// Laurent coefficients of `t^0..=t^N` and the extracted sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSeries {
    pub spec: InstanceSpec,
    pub order: usize,
    pub laurent_coefficients: Vec<LaurentPoly>,
    pub extracted: Vec<Rational>,
}

impl DiagonalSeries {
    /// The extracted terms as nonnegative integers. Fails if any term is not
    /// one, which would mean the enumerator was malformed.
    pub fn integer_terms(&self) -> Result<Vec<BigUint>> {
        self.extracted
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if !a.is_integer() || a.is_negative() {
                    return Err(Error::Degenerate(alloc::format!("diagonal term a({n}) = {a} is not a count")));
                }
                Ok(a.to_integer().magnitude().clone())
            })
            .collect()
    }
}

/// Expand the diagonal of an enumerator built for `F.spec()` to order `n_max`.
pub fn expand_diagonal(f: &WeightEnumerator, n_max: usize) -> Result<DiagonalSeries> {
    let spec = f.spec();
    let (coeffs, extracted) = expand_diagonal_with(f, spec.weights(), spec.target(), n_max)?;
    Ok(DiagonalSeries { spec: spec.clone(), order: n_max, laurent_coefficients: coeffs, extracted })
}

/// Same expansion with arbitrary (possibly zero) weights and target. Returns
/// the Laurent coefficients and the `s^target` coefficient of each.
pub fn expand_diagonal_with(
    f: &WeightEnumerator,
    weights: &[i64],
    target: i64,
    n_max: usize,
) -> Result<(Vec<LaurentPoly>, Vec<Rational>)> {
    let nvars = f.value().vars().len();
    if weights.len() + 1 != nvars {
        return Err(Error::Usage(alloc::format!(
            "expected {} weights, got {}",
            nvars - 1,
            weights.len()
        )));
    }
    // slot 0 is t, which is the expansion variable and keeps no weight
    let mut w = Vec::with_capacity(nvars);
    w.push(0);
    w.extend_from_slice(weights);
    let zero = LaurentPoly::zero(Var::S);
    let num = f.numerator().specialize_laurent(0, &w, Var::S);
    let den = f.denominator().specialize_laurent(0, &w, Var::S);
    let num = TruncSeries::from_prefix(num, n_max, &zero, Var::T);
    let den = TruncSeries::from_prefix(den, n_max, &zero, Var::T);
    let coeffs = num.mul(&den.invert()?).into_coeffs();
    let extracted = coeffs.iter().map(|c| c.coeff(target)).collect();
    Ok((coeffs, extracted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::cluster::build_enumerator;
    use crate::words::oracle_terms;
    use num_bigint::BigUint;
    use num_traits::Zero;

    fn spec(m: usize, p: &[&str], c: &[i64], r: i64) -> InstanceSpec {
        InstanceSpec::parse(m, p, c.to_vec(), r).unwrap()
    }

    #[test]
    fn stanley_second_order_laurent_coefficient() {
        let f = build_enumerator(&spec(2, &["HT", "TT"], &[1, -1], 0)).unwrap();
        let d = expand_diagonal(&f, 4).unwrap();
        assert_eq!(alloc::format!("{}", d.laurent_coefficients[2]), "s^-1+2+s");
        assert_eq!(d.extracted, [1, 2, 2, 3, 6].map(int).to_vec());
    }

    #[test]
    fn central_binomial() {
        let f = build_enumerator(&spec(2, &["H", "T"], &[1, -1], 0)).unwrap();
        let d = expand_diagonal(&f, 10).unwrap();
        assert_eq!(d.extracted, [1, 0, 2, 0, 6, 0, 20, 0, 70, 0, 252].map(int).to_vec());
    }

    #[test]
    fn unreachable_target_is_all_zero() {
        let f = build_enumerator(&spec(2, &["HT", "TT"], &[1, -1], 9)).unwrap();
        let d = expand_diagonal(&f, 8).unwrap();
        assert!(d.extracted.iter().all(|a| a.is_zero()));
    }

    #[test]
    fn zero_weights_count_all_words() {
        let f = build_enumerator(&spec(3, &["ab", "ca"], &[1, -1], 0)).unwrap();
        let (_, a) = expand_diagonal_with(&f, &[0, 0], 0, 8).unwrap();
        let want: Vec<Rational> = (0..=8u32).map(|n| int(3i64.pow(n))).collect();
        assert_eq!(a, want);
    }

    #[test]
    fn matches_oracle_and_support_bounds() {
        for (m, p, c, r) in [
            (2, &["HT", "TT"][..], &[1, -1][..], 0),
            (2, &["HHT", "TTH"], &[2, -1], 1),
            (3, &["ab", "bc"], &[1, -2], 0),
            (3, &["aba", "cc"], &[-1, 3], -1),
        ] {
            let sp = spec(m, p, c, r);
            let f = build_enumerator(&sp).unwrap();
            let d = expand_diagonal(&f, 14).unwrap();
            let want: Vec<BigUint> = oracle_terms(&sp, 14);
            assert_eq!(d.integer_terms().unwrap(), want);
            let (up, down) = sp.step_bounds();
            for (n, lc) in d.laurent_coefficients.iter().enumerate() {
                assert_eq!(lc.coefficient_sum(), int((m as i64).pow(n as u32)));
                let (lo, hi) = lc.support().unwrap();
                assert!(lo >= -(n as i64) * down && hi <= n as i64 * up);
            }
        }
    }
}

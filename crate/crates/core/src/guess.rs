//! Guessing an algebraic equation `Q(t, P) = 0` for a generating function,
//! and a P-recursive recurrence for its coefficients, from exact terms.
//!
//! Every guess is fitted with at least `guard` more linear constraints than
//! unknowns and then checked against all supplied terms. A guess is evidence,
//! not proof; the verified order or range travels with it.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{full_column_rank_mod_p, int, nullspace, MultiPoly, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// Polynomial relation `Q(t, P(t)) = 0`, with `Q` over the indeterminates
/// `t, P`, integral, primitive and sign-normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicEquation {
    q: MultiPoly,
    deg_t: usize,
    deg_p: usize,
    /// `Q(t, P(t)) = O(t^(verified_order + 1))` on the terms it was checked
    /// against; `-1` means not even the constant term vanishes.
    pub verified_order: i64,
}

impl AlgebraicEquation {
    /// Build from coefficient polynomials `c_j(t)` of `P^j`. The result is
    /// normalized; `verified_order` starts at `-1`.
    pub fn from_p_coefficients(coeffs: &[UniPoly]) -> Result<Self> {
        let vars = vec![Var::T, Var::P];
        let mut terms = Vec::new();
        for (j, c) in coeffs.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                terms.push((vec![i as u32, j as u32], a.clone()));
            }
        }
        Self::from_multipoly(MultiPoly::from_terms(vars, terms))
    }

    /// Normalize an arbitrary nonzero polynomial in `t, P`.
    pub fn from_multipoly(q: MultiPoly) -> Result<Self> {
        if q.vars() != [Var::T, Var::P] {
            return Err(Error::Usage("algebraic equations use the indeterminates t, P".into()));
        }
        let deg_p = q.degree_in(1).ok_or_else(|| Error::Degenerate("zero polynomial".into()))? as usize;
        if deg_p == 0 {
            return Err(Error::Degenerate("equation does not involve P".into()));
        }
        let deg_t = q.degree_in(0).unwrap_or(0) as usize;
        let q = normalize_q(q);
        Ok(AlgebraicEquation { q, deg_t, deg_p, verified_order: -1 })
    }

    pub fn q(&self) -> &MultiPoly {
        &self.q
    }

    pub fn deg_t(&self) -> usize {
        self.deg_t
    }

    pub fn deg_p(&self) -> usize {
        self.deg_p
    }

    /// Coefficient polynomials in `t` of `P^0..=P^degP`.
    pub fn p_coefficients(&self) -> Vec<UniPoly> {
        self.q
            .coefficients_in(1)
            .iter()
            .map(|c| c.eval_except(0, &[Rational::zero(), Rational::zero()]))
            .collect()
    }
}

/// P-major order used for sign normalization: the `P^degP` coefficient's
/// lowest `t`-power leads. This puts `(1-4*t^2)*P^2 - 1` rather than its
/// negative in canonical form.
fn p_major_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a[1].cmp(&b[1]).then_with(|| b[0].cmp(&a[0]))
}

fn normalize_q(q: MultiPoly) -> MultiPoly {
    let coeffs: Vec<Rational> = q.terms().iter().map(|(_, c)| (*c).clone()).collect();
    let den = crate::arith::common_denominator(&coeffs);
    let ints: Vec<_> = coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let mut factor = Rational::new(den, crate::arith::integer_content(&ints));
    let lead = q.terms().into_iter().max_by(|a, b| p_major_cmp(a.0, b.0)).map(|(_, c)| c.is_negative());
    if lead == Some(true) {
        factor = -factor;
    }
    q.scale(&factor)
}

impl fmt::Display for AlgebraicEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(UniPoly, String)> = self
            .p_coefficients()
            .into_iter()
            .enumerate()
            .rev()
            .map(|(j, c)| {
                let power = match j {
                    0 => String::new(),
                    1 => "P".into(),
                    _ => alloc::format!("P^{j}"),
                };
                (c, power)
            })
            .collect();
        write!(f, "{} = 0", render_combination(&items))
    }
}

/// Render `sum c_k * x_k` compactly. The sign of each summand follows the
/// first coefficient shown for `c_k`, so `-(4*n+4)` prints as `- (4*n+4)`.
pub(crate) fn render_combination(items: &[(UniPoly, String)]) -> String {
    let mut out = String::new();
    for (c, x) in items {
        if c.is_zero() {
            continue;
        }
        let descending = c.var() == Var::N;
        let nz: Vec<&Rational> = c.coeffs().iter().filter(|a| !a.is_zero()).collect();
        let first = if descending { nz[nz.len() - 1] } else { nz[0] };
        let negative = first.is_negative();
        let c = if negative { -c.clone() } else { c.clone() };
        let body = c.render(descending);
        let term = if x.is_empty() {
            body
        } else if c.is_constant() && c.coeff(0).is_one() {
            x.clone()
        } else if nz.len() == 1 {
            alloc::format!("{body}*{x}")
        } else {
            alloc::format!("({body})*{x}")
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Truncated powers `P^0..=P^deg_p` modulo `t^len`.
fn powers(terms: &[Rational], deg_p: usize) -> Vec<UniPoly> {
    let len = terms.len();
    let p = UniPoly::new(terms.to_vec(), Var::T);
    let mut out = vec![UniPoly::one(Var::T)];
    for _ in 0..deg_p {
        let next = out.last().unwrap().mul_trunc(&p, len);
        out.push(next);
    }
    out
}

/// Pick the kernel vector with the fewest nonzero entries, breaking ties by
/// the smallest largest-index nonzero entry.
fn select_kernel(basis: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    basis.into_iter().min_by_key(|v| {
        let support = v.iter().filter(|x| !x.is_zero()).count();
        let top = v.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
        (support, top)
    })
}

/// Fit `Q` with `deg_t(Q) <= deg_t`, `deg_P(Q) <= deg_p` to all `terms`.
///
/// Needs `(deg_t + 1)(deg_p + 1) + guard <= terms.len()`. Returns `None` when
/// the kernel is trivial.
pub fn guess_algebraic(terms: &[Rational], deg_t: usize, deg_p: usize, guard: usize) -> Result<Option<AlgebraicEquation>> {
    if deg_p == 0 {
        return Err(Error::Usage("degP must be at least 1".into()));
    }
    let unknowns = (deg_t + 1) * (deg_p + 1);
    let required = unknowns + guard;
    if terms.len() < required {
        return Err(Error::InsufficientTerms { required, available: terms.len() });
    }
    let pows = powers(terms, deg_p);
    // column (j, i) holds the coefficients of t^i * P^j
    let cols: Vec<(usize, usize)> = (0..=deg_p).flat_map(|j| (0..=deg_t).map(move |i| (j, i))).collect();
    let matrix: Vec<Vec<Rational>> = (0..terms.len())
        .map(|n| {
            cols.iter()
                .map(|&(j, i)| if n >= i { pows[j].coeff(n - i) } else { Rational::zero() })
                .collect()
        })
        .collect();
    if full_column_rank_mod_p(&matrix, cols.len()) {
        return Ok(None);
    }
    let Some(v) = select_kernel(nullspace(&matrix)) else { return Ok(None) };
    let mut coeffs = vec![vec![Rational::zero(); deg_t + 1]; deg_p + 1];
    for (k, &(j, i)) in cols.iter().enumerate() {
        coeffs[j][i] = v[k].clone();
    }
    let coeffs: Vec<UniPoly> = coeffs.into_iter().map(|c| UniPoly::new(c, Var::T)).collect();
    let mut eq = AlgebraicEquation::from_p_coefficients(&coeffs)?;
    eq.verified_order = verify_algebraic(&eq, terms);
    if eq.verified_order + 1 < terms.len() as i64 {
        return Ok(None);
    }
    Ok(Some(eq))
}

/// Cells `(deg_t, deg_p)` with `deg_p >= 1` by increasing `deg_t + deg_p`,
/// ties by smaller `deg_p`.
pub fn algebraic_schedule(max_deg_t: usize, max_deg_p: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for sum in 1..=max_deg_t + max_deg_p {
        for dp in 1..=max_deg_p.min(sum) {
            let dt = sum - dp;
            if dt <= max_deg_t {
                cells.push((dt, dp));
            }
        }
    }
    cells
}

/// Walk [`algebraic_schedule`], skipping cells the terms cannot support with
/// the guard, and return the first verified equation.
pub fn search_algebraic(terms: &[Rational], max_deg_t: usize, max_deg_p: usize, guard: usize) -> Result<Option<AlgebraicEquation>> {
    for (dt, dp) in algebraic_schedule(max_deg_t, max_deg_p) {
        if (dt + 1) * (dp + 1) + guard > terms.len() {
            continue;
        }
        if let Some(eq) = guess_algebraic(terms, dt, dp, guard)? {
            return Ok(Some(eq));
        }
    }
    Ok(None)
}

/// Largest `M` with `Q(t, P(t)) = O(t^(M+1))`, where `P` is the truncation
/// to the supplied terms. Returns `terms.len() - 1` when everything checks.
pub fn verify_algebraic(eq: &AlgebraicEquation, terms: &[Rational]) -> i64 {
    let len = terms.len();
    let pows = powers(terms, eq.deg_p);
    let mut acc = UniPoly::zero(Var::T);
    for (j, c) in eq.p_coefficients().iter().enumerate() {
        acc = &acc + &c.mul_trunc(&pows[j], len);
    }
    match acc.coeffs().iter().position(|x| !x.is_zero()) {
        Some(k) => k as i64 - 1,
        None => len as i64 - 1,
    }
}

/// `sum_i c_i(n) a(n+i) = 0`, coefficients in `n`, integral, primitive, with
/// the leading coefficient of `c_order` positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomicRecurrence {
    coefficients: Vec<UniPoly>,
    /// Inclusive range of `n` on which the relation was checked.
    pub verified_range: Option<(usize, usize)>,
}

impl HolonomicRecurrence {
    /// Trims vanishing top coefficients and normalizes. Fails if nothing of
    /// order at least one remains.
    pub fn new(coefficients: Vec<UniPoly>) -> Result<Self> {
        let mut c = coefficients;
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        if c.len() < 2 {
            return Err(Error::Degenerate("recurrence of order zero".into()));
        }
        if c.iter().any(|p| p.var() != Var::N) {
            return Err(Error::Usage("recurrence coefficients are polynomials in n".into()));
        }
        let all: Vec<Rational> = c.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
        let den = crate::arith::common_denominator(&all);
        let ints: Vec<_> = all.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut factor = Rational::new(den, crate::arith::integer_content(&ints));
        if c.last().unwrap().leading().unwrap().is_negative() {
            factor = -factor;
        }
        let coefficients = c.iter().map(|p| p.scale(&factor)).collect();
        Ok(HolonomicRecurrence { coefficients, verified_range: None })
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Largest degree in `n` among the coefficients.
    pub fn degree(&self) -> usize {
        self.coefficients.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[UniPoly] {
        &self.coefficients
    }

    /// `sum_i c_i(n) a(n+i)`, or `None` if a needed term is missing.
    pub fn residual(&self, terms: &[Rational], n: usize) -> Option<Rational> {
        if n + self.order() >= terms.len() {
            return None;
        }
        let nn = int(n as i64);
        Some(
            self.coefficients
                .iter()
                .enumerate()
                .filter(|(i, _)| !terms[n + i].is_zero())
                .fold(Rational::zero(), |acc, (i, c)| acc + c.eval(&nn) * &terms[n + i]),
        )
    }

    /// Smallest `n` where the relation fails on `terms`.
    pub fn first_violation(&self, terms: &[Rational]) -> Option<usize> {
        (0..terms.len().saturating_sub(self.order())).find(|&n| !self.residual(terms, n).unwrap().is_zero())
    }
}

impl fmt::Display for HolonomicRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(UniPoly, String)> = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| {
                let x = if i == 0 { "a(n)".to_string() } else { alloc::format!("a(n+{i})") };
                (c.clone(), x)
            })
            .collect();
        write!(f, "{} = 0", render_combination(&items))
    }
}

/// The relation holds on every `n` the terms reach: returns that range.
pub fn verify_recurrence(rec: &HolonomicRecurrence, terms: &[Rational]) -> Option<(usize, usize)> {
    if terms.len() <= rec.order() || rec.first_violation(terms).is_some() {
        return None;
    }
    Some((0, terms.len() - 1 - rec.order()))
}

/// Fit a recurrence of exactly this order and degree bound to all terms.
/// Needs `(order + 1)(deg + 1) + order + guard <= terms.len()`.
pub fn guess_recurrence_cell(terms: &[Rational], order: usize, deg: usize, guard: usize) -> Result<Option<HolonomicRecurrence>> {
    let required = (order + 1) * (deg + 1) + order + guard;
    if terms.len() < required {
        return Err(Error::InsufficientTerms { required, available: terms.len() });
    }
    if order == 0 {
        return Err(Error::Usage("recurrence order must be at least 1".into()));
    }
    let ncols = (order + 1) * (deg + 1);
    let matrix: Vec<Vec<Rational>> = (0..terms.len() - order)
        .map(|n| {
            let mut row = Vec::with_capacity(ncols);
            for i in 0..=order {
                let mut x = terms[n + i].clone();
                for _ in 0..=deg {
                    row.push(x.clone());
                    x *= int(n as i64);
                }
            }
            row
        })
        .collect();
    if full_column_rank_mod_p(&matrix, ncols) {
        return Ok(None);
    }
    let Some(v) = select_kernel(nullspace(&matrix)) else { return Ok(None) };
    let coeffs: Vec<UniPoly> = v.chunks(deg + 1).map(|c| UniPoly::new(c.to_vec(), Var::N)).collect();
    let Ok(mut rec) = HolonomicRecurrence::new(coeffs) else { return Ok(None) };
    rec.verified_range = verify_recurrence(&rec, terms);
    Ok(rec.verified_range.map(|_| rec))
}

/// Cells `(order, deg)` with `order >= 1` by increasing `order + deg`, ties by
/// smaller order.
pub fn recurrence_schedule(max_order: usize, max_deg: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for sum in 1..=max_order + max_deg {
        for order in 1..=max_order.min(sum) {
            let deg = sum - order;
            if deg <= max_deg {
                cells.push((order, deg));
            }
        }
    }
    cells
}

/// Walk [`recurrence_schedule`], skipping cells the terms cannot support,
/// and return the first verified recurrence.
pub fn search_recurrence(terms: &[Rational], max_order: usize, max_deg: usize, guard: usize) -> Result<Option<HolonomicRecurrence>> {
    for (order, deg) in recurrence_schedule(max_order, max_deg) {
        if (order + 1) * (deg + 1) + order + guard > terms.len() {
            continue;
        }
        if let Some(rec) = guess_recurrence_cell(terms, order, deg, guard)? {
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

/// Search with the whole box required to fit:
/// `(max_order + 1)(max_deg + 1) + max_order + guard <= terms.len()`.
pub fn guess_recurrence(terms: &[Rational], max_order: usize, max_deg: usize, guard: usize) -> Result<Option<HolonomicRecurrence>> {
    let required = (max_order + 1) * (max_deg + 1) + max_order + guard;
    if terms.len() < required {
        return Err(Error::InsufficientTerms { required, available: terms.len() });
    }
    search_recurrence(terms, max_order, max_deg, guard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn central(n: usize) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut c = Rational::one();
        for k in 0..n {
            if k % 2 == 0 {
                out.push(c.clone());
                let m = (k / 2) as i64;
                c = c * int(2 * (2 * m + 1)) / int(m + 1);
            } else {
                out.push(Rational::zero());
            }
        }
        out
    }

    fn geometric(m: i64, n: usize) -> Vec<Rational> {
        (0..n as u32).map(|k| int(m.pow(k))).collect()
    }

    #[test]
    fn central_binomial_equation() {
        let eq = guess_algebraic(&central(50), 2, 2, 10).unwrap().unwrap();
        assert_eq!(format!("{eq}"), "(1-4*t^2)*P^2 - 1 = 0");
        assert_eq!(eq.verified_order, 49);
        assert_eq!(verify_algebraic(&eq, &central(50)), 49);
    }

    #[test]
    fn rational_series_equation() {
        let eq = guess_algebraic(&geometric(2, 20), 1, 1, 10).unwrap().unwrap();
        assert_eq!(format!("{eq}"), "(1-2*t)*P - 1 = 0");
    }

    #[test]
    fn search_prefers_simple_cells() {
        let eq = search_algebraic(&central(50), 12, 12, 10).unwrap().unwrap();
        assert_eq!((eq.deg_t(), eq.deg_p()), (2, 2));
    }

    #[test]
    fn insufficient_terms_name_the_requirement() {
        assert_eq!(
            guess_algebraic(&central(12), 2, 2, 10),
            Err(Error::InsufficientTerms { required: 19, available: 12 })
        );
        assert_eq!(
            guess_recurrence(&central(50), 8, 12, 10),
            Err(Error::InsufficientTerms { required: 135, available: 50 })
        );
    }

    #[test]
    fn verification_detects_mismatch() {
        let q = MultiPoly::from_terms(
            vec![Var::T, Var::P],
            [(vec![0, 1], int(1)), (vec![0, 0], int(-1))],
        );
        let eq = AlgebraicEquation::from_multipoly(q).unwrap();
        assert_eq!(verify_algebraic(&eq, &[int(1), int(0)]), 1);
        assert_eq!(verify_algebraic(&eq, &[int(1), int(2)]), 0);
    }

    #[test]
    fn corrupted_coefficient_is_rejected() {
        let mut eq = guess_algebraic(&central(50), 2, 2, 10).unwrap().unwrap();
        let mut c = eq.p_coefficients();
        c[2] = &c[2] + &UniPoly::monomial(int(1), 1, Var::T);
        eq = AlgebraicEquation::from_p_coefficients(&c).unwrap();
        assert!(verify_algebraic(&eq, &central(50)) < 49);
    }

    #[test]
    fn central_binomial_recurrence() {
        let rec = guess_recurrence(&central(50), 2, 3, 10).unwrap().unwrap();
        assert_eq!(format!("{rec}"), "(n+2)*a(n+2) - (4*n+4)*a(n) = 0");
        assert_eq!(rec.verified_range, Some((0, 47)));
    }

    #[test]
    fn geometric_recurrence() {
        let rec = search_recurrence(&geometric(3, 30), 8, 12, 10).unwrap().unwrap();
        assert_eq!(format!("{rec}"), "a(n+1) - 3*a(n) = 0");
    }

    #[test]
    fn recurrence_is_scale_invariant_and_deterministic() {
        let t = central(50);
        let scaled: Vec<Rational> = t.iter().map(|x| x * crate::arith::frac(-7, 3)).collect();
        let a = search_recurrence(&t, 4, 4, 10).unwrap();
        assert_eq!(a, search_recurrence(&scaled, 4, 4, 10).unwrap());
        assert_eq!(a, search_recurrence(&t, 4, 4, 10).unwrap());
    }

    #[test]
    fn schedules_follow_sum_then_smaller_first_index() {
        assert_eq!(algebraic_schedule(2, 2), [(0, 1), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2)]);
        assert_eq!(recurrence_schedule(2, 1), [(1, 0), (1, 1), (2, 0), (2, 1)]);
    }
}

//! Fraction-free Gauss-Jordan elimination over an integral domain.
//!
//! Every step replaces a row entry by `(p * a[i][j] - a[i][c] * a[r][j]) / prev`
//! where `p` is the current pivot and `prev` the previous one; the division is
//! exact by Sylvester's identity. At the end every pivot equals the same
//! element `d`, so the kernel vector for a free column `f` is read off as
//! `x[f] = d`, `x[pivot(k)] = -a[k][f]`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::rational::{common_denominator, integer_content, Rational};

/// Integral domain with exact division, as needed by fraction-free elimination.
pub trait Domain: Clone {
    fn is_zero(&self) -> bool;
    fn one_like(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, panicking if the division is not exact.
    fn exact_div(&self, d: &Self) -> Self;
    /// Pivot preference: smaller is better.
    fn size(&self) -> u64;
    /// Divide a kernel vector by its content and fix its sign.
    fn normalize_vector(v: &mut [Self]);
}

impl Domain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(Zero::is_zero(&r), "inexact division in fraction-free elimination");
        q
    }
    fn size(&self) -> u64 {
        self.bits()
    }
    fn normalize_vector(v: &mut [Self]) {
        let g = integer_content(v.iter());
        if Zero::is_zero(&g) {
            return;
        }
        let flip = v.iter().rev().find(|x| !Zero::is_zero(*x)).is_some_and(|x| x.is_negative());
        for x in v.iter_mut() {
            *x = &*x / &g;
            if flip {
                *x = -&*x;
            }
        }
    }
}

impl Domain for UniPoly {
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn one_like(&self) -> Self {
        UniPoly::one(self.var())
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        UniPoly::exact_div(self, d).expect("inexact division in fraction-free elimination")
    }
    fn size(&self) -> u64 {
        self.degree().map_or(0, |d| d as u64)
    }
    fn normalize_vector(v: &mut [Self]) {
        let var = match v.first() {
            Some(p) => p.var(),
            None => return,
        };
        let g = v.iter().fold(UniPoly::zero(var), |g, p| UniPoly::gcd(&g, p));
        if g.is_zero() {
            return;
        }
        for p in v.iter_mut() {
            *p = UniPoly::exact_div(p, &g).unwrap();
        }
        // one common rational factor making everything integral and primitive
        let all: Vec<Rational> = v.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
        let den = common_denominator(&all);
        let ints: Vec<BigInt> = all.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut factor = Rational::new(den, integer_content(&ints));
        let last = v.iter().rev().find(|p| !p.is_zero()).and_then(|p| p.leading().cloned());
        if last.is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        for p in v.iter_mut() {
            *p = p.scale(&factor);
        }
    }
}

/// Basis of the right kernel of `rows` (each of length `ncols`). Vectors
/// come out normalized by `Domain::normalize_vector`, one per free column in
/// increasing column order.
pub fn nullspace_in<R: Domain>(mut rows: Vec<Vec<R>>, ncols: usize) -> Vec<Vec<R>> {
    let proto = match rows.iter().flatten().next() {
        Some(x) => x.clone(),
        // no sample element to build zero/one from; `nullspace` covers this case
        None => return Vec::new(),
    };
    let nrows = rows.len();
    let mut prev = proto.one_like();
    let mut pivots: Vec<usize> = Vec::new();
    for c in 0..ncols {
        let r = pivots.len();
        if r == nrows {
            break;
        }
        let pick = (r..nrows)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].size());
        let Some(pick) = pick else { continue };
        rows.swap(r, pick);
        let pivot_row = rows[r].clone();
        let p = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c].clone();
            for j in 0..ncols {
                if j == c {
                    continue;
                }
                let scaled = p.mul(&row[j]);
                let val = if factor.is_zero() {
                    scaled
                } else {
                    scaled.sub(&factor.mul(&pivot_row[j]))
                };
                row[j] = if val.is_zero() { val } else { val.exact_div(&prev) };
            }
            row[c] = p.sub(&p);
        }
        prev = p;
        pivots.push(c);
    }
    let zero = prev.sub(&prev);
    let mut basis = Vec::new();
    let mut k = 0;
    for f in 0..ncols {
        if k < pivots.len() && pivots[k] == f {
            k += 1;
            continue;
        }
        let mut v = vec![zero.clone(); ncols];
        v[f] = prev.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[row][f].neg();
        }
        R::normalize_vector(&mut v);
        basis.push(v);
    }
    basis
}

/// Exact kernel basis of a rational matrix.
///
/// Rows are cleared of denominators and eliminated fraction-free over the
/// integers; the returned vectors are integral, primitive and linearly
/// independent. An empty matrix (or an all-zero one) yields the standard
/// basis.
pub fn nullspace(matrix: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let ncols = matrix.first().map_or(0, |r| r.len());
    assert!(matrix.iter().all(|r| r.len() == ncols), "ragged matrix");
    let rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let den = common_denominator(row);
            row.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !Zero::is_zero(x)))
        .collect();
    if rows.is_empty() {
        return (0..ncols)
            .map(|f| (0..ncols).map(|j| if j == f { Rational::one() } else { Rational::zero() }).collect())
            .collect();
    }
    nullspace_in(rows, ncols)
        .into_iter()
        .map(|v| v.into_iter().map(Rational::from_integer).collect())
        .collect()
}

const PRIME: u64 = 0x1fff_ffff_ffff_ffff; // 2^61 - 1

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(x: &Rational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let num = x.numer().mod_floor(&p);
    let den = x.denom().mod_floor(&p);
    let den: u64 = den.try_into().ok()?;
    if den == 0 {
        return None;
    }
    let num: u64 = num.try_into().ok()?;
    Some(mulmod(num, powmod(den, PRIME - 2)))
}

/// Whether the matrix has full column rank modulo the prime `2^61 - 1`.
///
/// Rank can only drop under reduction, so `true` proves the rational kernel
/// is trivial. `false` is inconclusive (including when some denominator
/// vanishes mod the prime).
pub fn full_column_rank_mod_p(matrix: &[Vec<Rational>], ncols: usize) -> bool {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(matrix.len());
    for row in matrix {
        let mut out = Vec::with_capacity(ncols);
        for x in row {
            match reduce(x) {
                Some(v) => out.push(v),
                None => return false,
            }
        }
        rows.push(out);
    }
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pick) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            return false;
        };
        rows.swap(rank, pick);
        let inv = powmod(rows[rank][c], PRIME - 2);
        for i in rank + 1..rows.len() {
            let f = mulmod(rows[i][c], inv);
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                let sub = mulmod(f, rows[rank][j]);
                rows[i][j] = (rows[i][j] + PRIME - sub) % PRIME;
            }
        }
        rank += 1;
    }
    true
}

//! Exact arithmetic: rationals, dense and sparse polynomials, truncated power
//! series, rational functions and fraction-free linear algebra.

mod laurent;
mod linalg;
mod multi;
mod poly;
mod ratfunc;
mod rational;
mod series;
mod unifrac;
mod var;

pub use laurent::LaurentPoly;
pub use linalg::{full_column_rank_mod_p, nullspace, nullspace_in, Domain};
pub use multi::MultiPoly;
pub use poly::{PolyOp, UniPoly};
pub use ratfunc::RatFunc;
pub use rational::{bit_size, common_denominator, frac, int, integer_content, Rational};
pub use series::{Ring, TruncSeries};
pub use unifrac::UniFrac;
pub use var::Var;

use rayon::prelude::*;

use rps_core::words::{canonical_pairs, InstanceSpec, Lettering, PairClass, Symmetry};
use rps_core::{Error, Result};

use crate::cache::{solve_cached, Cache};
use crate::pipeline::{Proposition, SolveOptions};

/// One proposition per canonical pair of length-`k` words over `m` letters.
#[derive(Clone, Debug, PartialEq)]
pub struct Webbook {
    pub m: usize,
    pub k: usize,
    pub symmetry: Symmetry,
    pub classes: Vec<PairClass>,
    pub propositions: Vec<Proposition>,
}

/// The instances a webbook solves: each class representative with weights
/// `(1, -1)` and target 0, in class order.
pub fn webbook_specs(m: usize, k: usize, symmetry: Symmetry) -> Result<(Vec<PairClass>, Vec<InstanceSpec>)> {
    if m < 2 || k < 1 {
        return Err(Error::Usage(format!("webbooks need m >= 2 and k >= 1, got m = {m}, k = {k}")));
    }
    let classes = canonical_pairs(m, k, symmetry);
    let lettering = if m == 2 { Lettering::Coin } else { Lettering::Latin };
    let specs = classes
        .iter()
        .map(|c| {
            let (w1, w2) = c.representative.clone();
            InstanceSpec::pair(m, w1, w2, 1, 1, 0).map(|s| s.with_lettering(lettering))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((classes, specs))
}

/// Solve every representative in parallel; output order is the class order
/// regardless of completion order.
pub fn generate_webbook(m: usize, k: usize, symmetry: Symmetry, opts: &SolveOptions, cache: Option<&Cache>) -> Result<Webbook> {
    let (classes, specs) = webbook_specs(m, k, symmetry)?;
    let propositions = specs.par_iter().map(|s| solve_cached(s, opts, cache)).collect();
    Ok(Webbook { m, k, symmetry, classes, propositions })
}

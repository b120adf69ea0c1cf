use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{count_occurrences, InstanceSpec, PatternAutomaton, Word};

/// `a(0..=n_max)`: the number of length-`n` words whose weighted occurrence
/// count equals the target.
///
/// Dynamic programming over (automaton state, running weighted count). The
/// count is kept inside the band it can reach after `n` letters, and values
/// that can no longer return to the target before `n_max` are dropped.
pub fn oracle_terms(spec: &InstanceSpec, n_max: usize) -> Vec<BigUint> {
    let ac = PatternAutomaton::new(spec.alphabet_size(), spec.patterns());
    let (up, down) = spec.step_bounds();
    let lo = -(n_max as i64) * down;
    let hi = n_max as i64 * up;
    let width = (hi - lo + 1) as usize;
    let states = ac.states();
    let m = spec.alphabet_size();
    let target = spec.target();

    // weighted-count increment on entering each state
    let gain: Vec<i64> = (0..states)
        .map(|s| ac.hits(s).iter().map(|&i| spec.weights()[i]).sum())
        .collect();

    let mut cur: Vec<BigUint> = vec![BigUint::zero(); states * width];
    cur[(0 - lo) as usize] = BigUint::from(1u32);
    let mut terms = Vec::with_capacity(n_max + 1);
    let read = |table: &[BigUint]| -> BigUint {
        if target < lo || target > hi {
            return BigUint::zero();
        }
        let col = (target - lo) as usize;
        (0..states).map(|s| &table[s * width + col]).sum()
    };
    terms.push(read(&cur));
    for n in 1..=n_max {
        let mut next: Vec<BigUint> = vec![BigUint::zero(); states * width];
        let remaining = (n_max - n) as i64;
        let keep_lo = (target - up * remaining).max(-(n as i64) * down);
        let keep_hi = (target + down * remaining).min(n as i64 * up);
        for s in 0..states {
            for col in 0..width {
                let c = &cur[s * width + col];
                if c.is_zero() {
                    continue;
                }
                let v = lo + col as i64;
                for l in 0..m {
                    let t = ac.next(s, l as u8);
                    let v2 = v + gain[t];
                    if v2 < keep_lo || v2 > keep_hi {
                        continue;
                    }
                    next[t * width + (v2 - lo) as usize] += c;
                }
            }
        }
        cur = next;
        terms.push(read(&cur));
    }
    terms
}

/// Brute-force classification of all `m^n` words of length `n` by their
/// occurrence vector, counted by direct scanning.
pub fn classify_exhaustive(m: usize, patterns: &[Word], n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    let mut letters = vec![0u8; n];
    loop {
        let w = Word(letters.clone());
        let key: Vec<usize> = patterns.iter().map(|p| count_occurrences(&w, p)).collect();
        *out.entry(key).or_insert(0) += 1;
        // odometer increment
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            letters[i] += 1;
            if (letters[i] as usize) < m {
                break;
            }
            letters[i] = 0;
        }
    }
}

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::Word;

/// Group acting on pairs of words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Symmetry {
    /// All permutations of the letters, applied to both words.
    LetterPerms,
    /// Letter permutations combined with reversing both words. Reproduces the
    /// proposition counts of the published webbooks.
    #[default]
    LetterPermsAndReversal,
}

/// One orbit of unordered pairs of distinct equal-length words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClass {
    /// Lexicographically least pair in the orbit (with `.0 < .1`).
    pub representative: (Word, Word),
    /// Every pair of the orbit, sorted.
    pub orbit: Vec<(Word, Word)>,
}

fn all_words(m: usize, k: usize) -> Vec<Word> {
    let mut out = vec![Word(Vec::new())];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..m as u8).map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Word(v)
                })
            })
            .collect();
    }
    out
}

fn permutations(m: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for l in 0..used.len() {
            if !used[l] {
                used[l] = true;
                prefix.push(l as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[l] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn ordered(a: Word, b: Word) -> (Word, Word) {
    if a <= b { (a, b) } else { (b, a) }
}

/// Orbits of unordered pairs `{w1 != w2}` of length-`k` words over `m`
/// letters, in increasing order of representative.
pub fn canonical_pairs(m: usize, k: usize, symmetry: Symmetry) -> Vec<PairClass> {
    assert!(m >= 1 && k >= 1);
    let words = all_words(m, k);
    let perms = permutations(m);
    let reversal: &[bool] = match symmetry {
        Symmetry::LetterPerms => &[false],
        Symmetry::LetterPermsAndReversal => &[false, true],
    };
    let mut seen: BTreeSet<(Word, Word)> = BTreeSet::new();
    let mut classes = Vec::new();
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let pair = (a.clone(), b.clone());
            if seen.contains(&pair) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for perm in &perms {
                for &rev in reversal {
                    let map = |w: &Word| {
                        let w = Word(w.0.iter().map(|&l| perm[l as usize]).collect());
                        if rev { w.reversed() } else { w }
                    };
                    orbit.insert(ordered(map(a), map(b)));
                }
            }
            seen.extend(orbit.iter().cloned());
            classes.push(PairClass { representative: pair, orbit: orbit.into_iter().collect() });
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_length_two() {
        assert_eq!(canonical_pairs(2, 2, Symmetry::LetterPermsAndReversal).len(), 3);
        assert_eq!(canonical_pairs(2, 2, Symmetry::LetterPerms).len(), 4);
        assert_eq!(canonical_pairs(2, 3, Symmetry::LetterPermsAndReversal).len(), 11);
    }

    #[test]
    fn orbits_partition_all_pairs() {
        for (m, k) in [(2, 3), (3, 2), (3, 3)] {
            for sym in [Symmetry::LetterPerms, Symmetry::LetterPermsAndReversal] {
                let classes = canonical_pairs(m, k, sym);
                let total: usize = classes.iter().map(|c| c.orbit.len()).sum();
                let words = m.pow(k as u32);
                assert_eq!(total, words * (words - 1) / 2);
                for c in &classes {
                    assert_eq!(c.orbit[0], c.representative);
                }
            }
        }
    }
}

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Word;

/// Complete Aho-Corasick automaton over `0..m` for a set of patterns.
///
/// Entering a state reports every pattern that ends at the current position,
/// including patterns that are proper suffixes of others, so overlapping and
/// nested occurrences are all counted.
#[derive(Clone, Debug)]
pub struct PatternAutomaton {
    alphabet: usize,
    delta: Vec<u32>,
    hits: Vec<Vec<usize>>,
}

impl PatternAutomaton {
    pub fn new(alphabet: usize, patterns: &[Word]) -> Self {
        assert!(alphabet >= 1);
        let mut goto: Vec<Vec<Option<u32>>> = vec![vec![None; alphabet]];
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for (idx, p) in patterns.iter().enumerate() {
            assert!(!p.is_empty(), "empty pattern");
            let mut s = 0usize;
            for &l in p.letters() {
                let l = l as usize;
                assert!(l < alphabet, "letter outside alphabet");
                s = match goto[s][l] {
                    Some(n) => n as usize,
                    None => {
                        goto.push(vec![None; alphabet]);
                        out.push(Vec::new());
                        let n = goto.len() - 1;
                        goto[s][l] = Some(n as u32);
                        n
                    }
                };
            }
            out[s].push(idx);
        }
        let n = goto.len();
        let mut fail = vec![0usize; n];
        let mut delta = vec![0u32; n * alphabet];
        let mut queue = VecDeque::new();
        for l in 0..alphabet {
            match goto[0][l] {
                Some(c) => {
                    delta[l] = c;
                    queue.push_back(c as usize);
                }
                None => delta[l] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s];
            let inherited = out[f].clone();
            out[s].extend(inherited);
            for l in 0..alphabet {
                match goto[s][l] {
                    Some(c) => {
                        fail[c as usize] = delta[f * alphabet + l] as usize;
                        delta[s * alphabet + l] = c;
                        queue.push_back(c as usize);
                    }
                    None => delta[s * alphabet + l] = delta[f * alphabet + l],
                }
            }
        }
        for h in &mut out {
            h.sort_unstable();
        }
        PatternAutomaton { alphabet, delta, hits: out }
    }

    pub fn states(&self) -> usize {
        self.hits.len()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn next(&self, state: usize, letter: u8) -> usize {
        self.delta[state * self.alphabet + letter as usize] as usize
    }

    /// Indices of the patterns completed on entering `state`.
    pub fn hits(&self, state: usize) -> &[usize] {
        &self.hits[state]
    }

    /// Occurrence vector of all patterns in `word`.
    pub fn count(&self, word: &Word, npatterns: usize) -> Vec<usize> {
        let mut counts = vec![0; npatterns];
        let mut s = 0;
        for &l in word.letters() {
            s = self.next(s, l);
            for &h in self.hits(s) {
                counts[h] += 1;
            }
        }
        counts
    }
}

use alloc::string::String;
use alloc::vec::Vec;

use super::{Lettering, Word};
use crate::error::{Error, Result};

/// One counting problem: words over `0..alphabet_size` whose weighted
/// occurrence count `sum_i weights[i] * #patterns[i]` equals `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InstanceSpec {
    alphabet_size: usize,
    patterns: Vec<Word>,
    weights: Vec<i64>,
    target: i64,
    lettering: Lettering,
}

impl InstanceSpec {
    pub fn new(alphabet_size: usize, patterns: Vec<Word>, weights: Vec<i64>, target: i64) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::Usage("alphabet size must be at least 1".into()));
        }
        if patterns.is_empty() {
            return Err(Error::Usage("at least one pattern is required".into()));
        }
        if patterns.len() != weights.len() {
            return Err(Error::Usage(alloc::format!(
                "{} patterns but {} weights",
                patterns.len(),
                weights.len()
            )));
        }
        for (i, p) in patterns.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::Usage("patterns must be nonempty".into()));
            }
            if p.letters().iter().any(|&l| l as usize >= alphabet_size) {
                return Err(Error::Usage(alloc::format!("pattern {p} uses a letter outside the alphabet")));
            }
            if patterns[..i].contains(p) {
                return Err(Error::Usage(alloc::format!("pattern {p} is repeated")));
            }
        }
        if weights.contains(&0) {
            return Err(Error::Usage("weights must be nonzero".into()));
        }
        Ok(InstanceSpec { alphabet_size, patterns, weights, target, lettering: Lettering::Latin })
    }

    /// The two-word form `a1 * #w1 - a2 * #w2 = r` with positive `a1`, `a2`.
    pub fn pair(alphabet_size: usize, w1: Word, w2: Word, a1: i64, a2: i64, r: i64) -> Result<Self> {
        if a1 <= 0 || a2 <= 0 {
            return Err(Error::Usage("a1 and a2 must be positive".into()));
        }
        Self::new(alphabet_size, alloc::vec![w1, w2], alloc::vec![a1, -a2], r)
    }

    /// Parse patterns from text, keeping the lettering of the input for
    /// rendering.
    pub fn parse(alphabet_size: usize, patterns: &[&str], weights: Vec<i64>, target: i64) -> Result<Self> {
        let mut words = Vec::with_capacity(patterns.len());
        let mut lettering = None;
        for text in patterns {
            let (w, l) = Word::parse(text, alphabet_size)?;
            if lettering.is_some_and(|prev| prev != l) {
                return Err(Error::Usage("patterns mix H/T and Latin letters".into()));
            }
            lettering = Some(l);
            words.push(w);
        }
        let spec = Self::new(alphabet_size, words, weights, target)?;
        Ok(spec.with_lettering(lettering.unwrap_or_default()))
    }

    pub fn with_lettering(mut self, lettering: Lettering) -> Self {
        if self.alphabet_size == 2 || lettering == Lettering::Latin {
            self.lettering = lettering;
        }
        self
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn patterns(&self) -> &[Word] {
        &self.patterns
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn lettering(&self) -> Lettering {
        self.lettering
    }

    /// Largest increase / decrease of the weighted count per letter.
    pub fn step_bounds(&self) -> (i64, i64) {
        let up = self.weights.iter().filter(|&&c| c > 0).sum();
        let down = self.weights.iter().filter(|&&c| c < 0).map(|c| -c).sum();
        (up, down)
    }

    /// First pair `(i, j)` with `patterns[i]` a factor of `patterns[j]`.
    pub fn factor_containment(&self) -> Option<(usize, usize)> {
        for (i, a) in self.patterns.iter().enumerate() {
            for (j, b) in self.patterns.iter().enumerate() {
                if i != j && a.is_factor_of(b) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Apply a letter permutation (`perm[old] = new`) to every pattern.
    pub fn permute_letters(&self, perm: &[u8]) -> Self {
        let patterns = self
            .patterns
            .iter()
            .map(|p| Word(p.letters().iter().map(|&l| perm[l as usize]).collect()))
            .collect();
        InstanceSpec { patterns, ..self.clone() }
    }

    pub fn reversed(&self) -> Self {
        let patterns = self.patterns.iter().map(Word::reversed).collect();
        InstanceSpec { patterns, ..self.clone() }
    }

    pub fn render_pattern(&self, i: usize) -> String {
        self.patterns[i].render(self.lettering)
    }

    /// Stable textual key, e.g. `m=2;ab:1,bb:-1;r=0`.
    pub fn canonical_key(&self) -> String {
        let parts: Vec<String> = self
            .patterns
            .iter()
            .zip(&self.weights)
            .map(|(p, c)| alloc::format!("{p}:{c}"))
            .collect();
        alloc::format!("m={};{};r={}", self.alphabet_size, parts.join(","), self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(InstanceSpec::parse(2, &["HT", "HT"], alloc::vec![1, -1], 0).is_err());
        assert!(InstanceSpec::parse(2, &["HT", ""], alloc::vec![1, -1], 0).is_err());
        assert!(InstanceSpec::parse(2, &["HT", "TT"], alloc::vec![1, 0], 0).is_err());
        assert!(InstanceSpec::parse(2, &["HT"], alloc::vec![1, -1], 0).is_err());
        assert!(InstanceSpec::parse(2, &["HT", "ab"], alloc::vec![1, -1], 0).is_err());
        let s = InstanceSpec::parse(2, &["HT", "TT"], alloc::vec![1, -1], 0).unwrap();
        assert_eq!(s.lettering(), Lettering::Coin);
        assert_eq!(s.render_pattern(1), "TT");
        assert_eq!(s.canonical_key(), "m=2;ab:1,bb:-1;r=0");
        assert_eq!(s.step_bounds(), (1, 1));
    }

    #[test]
    fn containment() {
        let s = InstanceSpec::parse(2, &["T", "TT"], alloc::vec![1, -1], 0).unwrap();
        assert_eq!(s.factor_containment(), Some((0, 1)));
        let s = InstanceSpec::parse(2, &["HT", "TT"], alloc::vec![1, -1], 0).unwrap();
        assert_eq!(s.factor_containment(), None);
    }
}

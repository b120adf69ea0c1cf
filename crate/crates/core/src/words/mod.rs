//! Words over a finite alphabet, factor occurrences, the counting oracle and
//! the symmetry classes of pattern pairs.

mod automaton;
mod instance;
mod oracle;
mod symmetry;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use automaton::PatternAutomaton;
pub use instance::InstanceSpec;
pub use oracle::{classify_exhaustive, oracle_terms};
pub use symmetry::{canonical_pairs, PairClass, Symmetry};

use crate::error::{Error, Result};

const LATIN: &[u8] = b"abcdefghijklmnopqrstuvwxyz";

/// A word as a list of letters `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

/// How letters are written in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Lettering {
    /// `a, b, c, ...`
    #[default]
    Latin,
    /// `H, T` for a two-letter alphabet.
    Coin,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse a word over the first `m` Latin letters; for `m = 2` the aliases
    /// `H` (first letter) and `T` (second) are accepted, but not mixed with
    /// Latin letters.
    pub fn parse(text: &str, m: usize) -> Result<(Word, Lettering)> {
        if m == 0 || m > LATIN.len() {
            return Err(Error::Usage(alloc::format!("alphabet size {m} out of range 1..=26")));
        }
        let coin = m == 2 && text.bytes().any(|b| b == b'H' || b == b'T');
        let mut letters = Vec::with_capacity(text.len());
        for b in text.bytes() {
            let letter = if coin {
                match b {
                    b'H' => 0,
                    b'T' => 1,
                    _ => return Err(Error::Usage(alloc::format!("cannot mix H/T with other letters in {text:?}"))),
                }
            } else {
                match LATIN[..m].iter().position(|&c| c == b) {
                    Some(i) => i as u8,
                    None => return Err(Error::Usage(alloc::format!("letter {:?} not in the first {m} letters", b as char))),
                }
            };
            letters.push(letter);
        }
        Ok((Word(letters), if coin { Lettering::Coin } else { Lettering::Latin }))
    }

    pub fn render(&self, lettering: Lettering) -> String {
        self.0
            .iter()
            .map(|&l| match lettering {
                Lettering::Coin => if l == 0 { 'H' } else { 'T' },
                Lettering::Latin => LATIN[l as usize] as char,
            })
            .collect()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Whether `self` occurs as a factor of `other`.
    pub fn is_factor_of(&self, other: &Word) -> bool {
        self.len() <= other.len() && other.0.windows(self.len()).any(|w| w == self.0.as_slice())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Lettering::Latin))
    }
}

/// Number of (possibly overlapping) occurrences of `pattern` in `word`.
/// Panics on an empty pattern.
pub fn count_occurrences(word: &Word, pattern: &Word) -> usize {
    assert!(!pattern.is_empty(), "empty pattern");
    if pattern.len() > word.len() {
        return 0;
    }
    word.0.windows(pattern.len()).filter(|w| *w == pattern.0.as_slice()).count()
}

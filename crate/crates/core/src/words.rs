//! Words over the positive integers and their two classifying statistics.
//!
//! A word is a finite sequence of letters `1, 2, 3, ...`, read left to
//! right; when a word drives a sequence of operators, the rightmost letter
//! acts first. Two statistics matter downstream:
//!
//! * the **weight** `w(x)`: how many times each letter occurs;
//! * the **alpha vector** `alpha(x)`: coordinate `i` is the maximum over all
//!   suffixes `s` of `x` (the empty suffix included) of
//!   `w_{i+1}(s) - w_i(s)`.
//!
//! Alpha is computed in one right-to-left pass using the concatenation rule
//! `alpha_i(a·b) = max(alpha_i(b), alpha_i(a) + w_{i+1}(b) - w_i(b))`: a
//! running suffix difference plus a running maximum per coordinate. The
//! quadratic suffix enumeration stays in the tests as an oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A letter of a word; letters are 1-indexed and unbounded.
pub type Letter = usize;

/// Error from an operation on a word.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    /// A letter was zero (letters start at 1).
    #[error("letter at position {position} is 0; letters start at 1")]
    ZeroLetter { position: usize },
    /// A restriction range was empty or started below 1.
    #[error("invalid letter range [{lo}, {hi}]")]
    BadRange { lo: Letter, hi: Letter },
    /// A shift would take some letter below 1.
    #[error("shift by {delta} takes letter {letter} below 1")]
    ShiftBelowOne { letter: Letter, delta: i64 },
}

/// A word over the positive integers.
///
/// Serializes as a plain array of letters, e.g. `[2,3,2,1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Word {
    letters: Vec<Letter>,
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Vec<usize> {
        w.letters
    }
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Builds a word, rejecting any zero letter.
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if let Some(position) = letters.iter().position(|&c| c == 0) {
            return Err(WordError::ZeroLetter { position });
        }
        Ok(Word { letters })
    }

    /// Builds a word from letters already known to be positive.
    ///
    /// Panics (in debug builds) on a zero letter.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&c| c >= 1));
        Word { letters }
    }

    /// The letters, leftmost first.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter present; 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Smallest letter present; 0 for the empty word.
    pub fn min_letter(&self) -> Letter {
        self.letters.iter().copied().min().unwrap_or(0)
    }

    /// Occurrence counts per letter.
    pub fn weight(&self) -> WeightVector {
        let mut counts = vec![0usize; self.max_letter()];
        for &c in &self.letters {
            counts[c - 1] += 1;
        }
        WeightVector::new(counts)
    }

    /// The suffix-maximum statistic described in the module docs.
    pub fn alpha(&self) -> AlphaVector {
        let m = self.max_letter();
        if m <= 1 {
            return AlphaVector::new(Vec::new());
        }
        // cur[i] = w_{i+1}(suffix) - w_i(suffix) for the suffix scanned so
        // far; best[i] its running maximum (>= 0 via the empty suffix).
        let mut cur = vec![0i64; m + 1];
        let mut best = vec![0i64; m + 1];
        for &c in self.letters.iter().rev() {
            if c >= 2 {
                cur[c - 1] += 1;
                if cur[c - 1] > best[c - 1] {
                    best[c - 1] = cur[c - 1];
                }
            }
            if c < m {
                cur[c] -= 1;
            }
        }
        AlphaVector::new(best[1..m].iter().map(|&v| v as usize).collect())
    }

    /// The subword of letters in `[lo, hi]`, order preserved.
    pub fn restrict(&self, lo: Letter, hi: Letter) -> Result<Word, WordError> {
        if lo < 1 || lo > hi {
            return Err(WordError::BadRange { lo, hi });
        }
        Ok(Word {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|&c| lo <= c && c <= hi)
                .collect(),
        })
    }

    /// Adds `delta` to every letter; fails if any letter would drop below 1.
    pub fn shift(&self, delta: i64) -> Result<Word, WordError> {
        let mut letters = Vec::with_capacity(self.letters.len());
        for &c in &self.letters {
            let moved = c as i64 + delta;
            if moved < 1 {
                return Err(WordError::ShiftBelowOne { letter: c, delta });
            }
            letters.push(moved as Letter);
        }
        Ok(Word { letters })
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl TryFrom<Vec<usize>> for Word {
    type Error = String;

    fn try_from(letters: Vec<usize>) -> Result<Self, Self::Error> {
        Word::new(letters).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Word {
    /// Digit string when all letters fit one digit, else space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.max_letter() <= 9 {
            for &c in &self.letters {
                write!(f, "{c}")?;
            }
        } else {
            for (k, &c) in self.letters.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Error from parsing the text form of a word.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid word at byte {position}: {reason}")]
pub struct WordParseError {
    pub position: usize,
    pub reason: String,
}

impl FromStr for Word {
    type Err = WordParseError;

    /// Parses either a digit string (`2321`) or space-separated letters
    /// (`2 3 12`). The digit form covers letters 1–9 only.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |position: usize, reason: &str| WordParseError {
            position,
            reason: reason.to_string(),
        };
        if s.trim().is_empty() {
            return Ok(Word::empty());
        }
        if s.contains(char::is_whitespace) {
            let mut letters = Vec::new();
            let mut at = 0;
            for tok in s.split_whitespace() {
                let position = at + s[at..].find(tok).unwrap();
                let c: usize = tok
                    .parse()
                    .map_err(|_| fail(position, "expected a positive integer letter"))?;
                if c == 0 {
                    return Err(fail(position, "letters start at 1"));
                }
                letters.push(c);
                at = position + tok.len();
            }
            Ok(Word { letters })
        } else {
            let mut letters = Vec::new();
            for (position, ch) in s.char_indices() {
                match ch.to_digit(10) {
                    Some(d) if d >= 1 => letters.push(d as usize),
                    Some(_) => return Err(fail(position, "letters start at 1")),
                    None => return Err(fail(position, "expected a digit 1-9")),
                }
            }
            Ok(Word { letters })
        }
    }
}

/// Occurrence counts of a word, indexed by letter.
///
/// Trailing zeros are insignificant: `(1,2,1)` and `(1,2,1,0)` are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<usize>);

/// The suffix-maximum statistic of a word, indexed by coordinate.
///
/// Trailing zeros are insignificant, as for [`WeightVector`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaVector(Vec<usize>);

macro_rules! stat_vector_impl {
    ($name:ident) => {
        impl $name {
            /// Builds the vector, stripping insignificant trailing zeros.
            pub fn new(mut values: Vec<usize>) -> Self {
                while values.last() == Some(&0) {
                    values.pop();
                }
                $name(values)
            }

            /// Value at 1-indexed coordinate `i`; 0 beyond the support.
            pub fn get(&self, i: usize) -> usize {
                assert!(i >= 1, "coordinates are 1-indexed");
                self.0.get(i - 1).copied().unwrap_or(0)
            }

            /// Stored values (support only).
            pub fn values(&self) -> &[usize] {
                &self.0
            }

            /// Number of leading coordinates stored.
            pub fn support_len(&self) -> usize {
                self.0.len()
            }

            /// The first `n` coordinates, zero-padded past the support.
            pub fn padded(&self, n: usize) -> Vec<usize> {
                (1..=n).map(|i| self.get(i)).collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, v) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

stat_vector_impl!(WeightVector);
stat_vector_impl!(AlphaVector);

//! Semistandard tableaux, row insertion, and Knuth moves on words.
//!
//! Row insertion sends a word to a pair of tableaux: the insertion tableau
//! `p` (semistandard) and the recording tableau `q` (standard), built by
//! inserting the word's letters left to right, each letter bumping the
//! leftmost strictly larger entry of the current row down to the next.
//!
//! Two words have the same insertion tableau exactly when one can be turned
//! into the other by Knuth moves: swapping the outer pair of a three-letter
//! window around a middle letter that separates them, in the two classic
//! patterns. [`knuth_neighbors`] generates those one-move neighbours, and
//! [`reading_word`] (rows bottom to top, each left to right) inverts
//! insertion: reading a tableau and inserting the result reproduces it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{partitions_up_to, Partition};
use crate::words::Word;

/// Validation failure for a tableau.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("row {row} is empty")]
    EmptyRow { row: usize },
    #[error("entry at row {row}, column {col} is zero")]
    ZeroEntry { row: usize, col: usize },
    #[error("row {row} is longer than the row above it")]
    RaggedRows { row: usize },
    #[error("row {row} decreases at column {col}")]
    RowDecrease { row: usize, col: usize },
    #[error("column {col} does not increase strictly at row {row}")]
    ColumnNotIncreasing { row: usize, col: usize },
}

/// A semistandard tableau: rows weakly increase left to right, columns
/// strictly increase top to bottom, and row lengths weakly decrease.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Vec<Vec<usize>> {
        t.rows
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        validate_rows(&rows)?;
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Wraps rows produced by an algorithm that maintains the invariants.
    fn from_insertion(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(validate_rows(&rows).is_ok());
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Whether the entries are exactly 1..=cells, each used once, with rows
    /// and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        let n = self.cells();
        let mut seen = vec![false; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || seen[e] {
                    return false;
                }
                seen[e] = true;
                if c > 0 && row[c - 1] >= e {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] >= e {
                    return false;
                }
            }
        }
        true
    }
}

fn validate_rows(rows: &[Vec<usize>]) -> Result<(), TableauError> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(TableauError::EmptyRow { row: r + 1 });
        }
        if r > 0 && row.len() > rows[r - 1].len() {
            return Err(TableauError::RaggedRows { row: r + 1 });
        }
        for (c, &e) in row.iter().enumerate() {
            if e == 0 {
                return Err(TableauError::ZeroEntry { row: r + 1, col: c + 1 });
            }
            if c > 0 && row[c - 1] > e {
                return Err(TableauError::RowDecrease { row: r + 1, col: c + 1 });
            }
            if r > 0 && rows[r - 1][c] >= e {
                return Err(TableauError::ColumnNotIncreasing { row: r + 1, col: c + 1 });
            }
        }
    }
    Ok(())
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = TableauError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        Tableau::new(rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// The insertion tableau `p` and recording tableau `q` of a word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RskPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Row-inserts the word's letters left to right.
pub fn rsk(x: &Word) -> RskPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in x.letters().iter().enumerate() {
        let mut carry = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&e| e > carry) {
                None => {
                    p[r].push(carry);
                    q[r].push(step + 1);
                    break;
                }
                Some(col) => {
                    std::mem::swap(&mut p[r][col], &mut carry);
                    r += 1;
                }
            }
        }
    }
    RskPair { p: Tableau::from_insertion(p), q: Tableau::from_insertion(q) }
}

/// Reads the rows bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Word {
    let letters: Vec<usize> = t.rows().iter().rev().flatten().copied().collect();
    Word::from_letters(letters)
}

/// Whether two words share an insertion tableau.
pub fn knuth_equivalent(x: &Word, y: &Word) -> bool {
    rsk(x).p == rsk(y).p
}

/// The canonical representative of a word's insertion class: the reading
/// word of its insertion tableau. All copies of the smallest letter come out
/// contiguous, since they occupy a prefix of the first row.
pub fn split_min_letter(x: &Word) -> Word {
    reading_word(&rsk(x).p)
}

/// All words one Knuth move away.
///
/// A move swaps the outer letters of a window `(w0, w1, w2)`: the last two
/// when `w1 < w0 <= w2` or `w2 < w0 <= w1`, the first two when
/// `w0 <= w2 < w1` or `w1 <= w2 < w0`.
pub fn knuth_neighbors(x: &Word) -> std::collections::BTreeSet<Word> {
    let mut out = std::collections::BTreeSet::new();
    let letters = x.letters();
    for p in 0..letters.len().saturating_sub(2) {
        let (w0, w1, w2) = (letters[p], letters[p + 1], letters[p + 2]);
        if (w1 < w0 && w0 <= w2) || (w2 < w0 && w0 <= w1) {
            let mut next = letters.to_vec();
            next.swap(p + 1, p + 2);
            out.insert(Word::from_letters(next));
        }
        if (w0 <= w2 && w2 < w1) || (w1 <= w2 && w2 < w0) {
            let mut next = letters.to_vec();
            next.swap(p, p + 1);
            out.insert(Word::from_letters(next));
        }
    }
    out
}

/// All semistandard tableaux with at most `max_cells` cells over the
/// alphabet `1..=max_letter`, including the empty one.
pub fn enumerate_ssyt(max_cells: usize, max_letter: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for shape in partitions_up_to(max_cells) {
        if shape.rows() > max_letter {
            continue;
        }
        let mut rows: Vec<Vec<usize>> = Vec::new();
        fill_shape(&shape, max_letter, 0, &mut rows, &mut out);
    }
    out
}

fn fill_shape(
    shape: &Partition,
    max_letter: usize,
    r: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if r == shape.rows() {
        out.push(Tableau::from_insertion(rows.clone()));
        return;
    }
    rows.push(Vec::new());
    fill_row(shape, max_letter, r, 0, rows, out);
    rows.pop();
}

fn fill_row(
    shape: &Partition,
    max_letter: usize,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if c == shape.row(r + 1) {
        fill_shape(shape, max_letter, r + 1, rows, out);
        return;
    }
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for e in lo..=max_letter {
        rows[r].push(e);
        fill_row(shape, max_letter, r, c + 1, rows, out);
        rows[r].pop();
    }
}

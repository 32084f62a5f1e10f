//! Integer partitions and single-box growth along columns.
//!
//! A partition is stored in row form: a weakly decreasing list of positive
//! row lengths. The column form (the conjugate) is what most of the operator
//! algebra works with, so both views are cheap to reach from here. Growth is
//! expressed column by column: [`Partition::add_box_column`] either produces
//! the cover obtained by appending one box at the bottom of a column, or
//! reports that no such cover exists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
///
/// Serializes as a plain array of row lengths, e.g. `[3,1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from row lengths.
    ///
    /// Trailing zeros are stripped. Panics if the parts are not weakly
    /// decreasing; that is a caller bug, not a data condition.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        Partition { parts }
    }

    /// Row lengths, longest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `r` (1-indexed); 0 beyond the last row.
    pub fn row(&self, r: usize) -> usize {
        assert!(r >= 1, "rows are 1-indexed");
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Height of column `i` (1-indexed); 0 beyond the last column.
    ///
    /// Callers that need a "column 0" treat it as unbounded; it is never
    /// materialized here.
    pub fn column_height(&self, i: usize) -> usize {
        assert!(i >= 1, "columns are 1-indexed");
        self.parts.iter().take_while(|&&p| p >= i).count()
    }

    /// All column heights, tallest first (the conjugate in vector form).
    pub fn column_heights(&self) -> Vec<usize> {
        let mut cols = vec![0usize; self.parts.first().copied().unwrap_or(0)];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        cols
    }

    /// The conjugate partition (rows and columns exchanged).
    pub fn conjugate(&self) -> Partition {
        Partition { parts: self.column_heights() }
    }

    /// Whether `self` contains `other` box-for-box (Young order).
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(r, &p)| self.row(r + 1) >= p)
    }

    /// Adds one box at the bottom of column `col` (1-indexed) when the result
    /// is still a partition; `None` otherwise.
    ///
    /// The new box lands in row `column_height(col) + 1`, which works exactly
    /// when column `col` is currently shorter than column `col - 1` (column 0
    /// counts as infinitely tall, so column 1 always accepts a box).
    pub fn add_box_column(&self, col: usize) -> Option<Partition> {
        assert!(col >= 1, "columns are 1-indexed");
        let height = self.column_height(col);
        if col > 1 && height >= self.column_height(col - 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        if height == parts.len() {
            debug_assert_eq!(col, 1, "a new row can only open in column 1");
            parts.push(1);
        } else {
            debug_assert_eq!(parts[height], col - 1);
            parts[height] += 1;
        }
        Some(Partition { parts })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = String;

    fn try_from(mut parts: Vec<usize>) -> Result<Self, Self::Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("parts are not weakly decreasing: {parts:?}"));
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing the text form of a partition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid partition at byte {position}: {reason}")]
pub struct PartitionParseError {
    /// Byte offset in the input where parsing failed.
    pub position: usize,
    /// What went wrong there.
    pub reason: String,
}

impl FromStr for Partition {
    type Err = PartitionParseError;

    /// Parses `(3,1)` or `()`; spaces after commas are tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |position: usize, reason: &str| PartitionParseError {
            position,
            reason: reason.to_string(),
        };
        let t = s.trim();
        let offset = s.len() - s.trim_start().len();
        if !t.starts_with('(') {
            return Err(fail(offset, "expected '('"));
        }
        if !t.ends_with(')') {
            return Err(fail(offset + t.len(), "expected ')'"));
        }
        let inner = &t[1..t.len() - 1];
        let mut parts = Vec::new();
        if !inner.trim().is_empty() {
            let mut at = offset + 1;
            for tok in inner.split(',') {
                let tok_off = at + (tok.len() - tok.trim_start().len());
                let p: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| fail(tok_off, "expected a nonnegative integer part"))?;
                parts.push(p);
                at += tok.len() + 1;
            }
        }
        Partition::try_from(parts).map_err(|reason| fail(offset, &reason))
    }
}

/// All partitions of exactly `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    return out;

    fn fill(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            stack.push(p);
            fill(remaining - p, p, stack, out);
            stack.pop();
        }
    }
}

/// All partitions of size at most `cap` (the empty partition included).
pub fn partitions_up_to(cap: usize) -> Vec<Partition> {
    (0..=cap).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Counts boxes of the diagram directly to cross-check column heights.
    fn column_height_by_counting(lambda: &Partition, col: usize) -> usize {
        (1..=lambda.rows())
            .filter(|&r| lambda.row(r) >= col)
            .count()
    }

    #[test]
    fn conjugate_of_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn conjugate_is_an_involution_and_matches_counting() {
        for lambda in partitions_up_to(9) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            for col in 1..=lambda.row(1) + 1 {
                assert_eq!(
                    lambda.column_height(col),
                    column_height_by_counting(&lambda, col),
                    "column {col} of {lambda}"
                );
            }
        }
    }

    #[test]
    fn add_box_column_examples() {
        assert_eq!(p(&[3, 1]).add_box_column(2), Some(p(&[3, 2])));
        assert_eq!(p(&[3, 3]).add_box_column(2), None);
        assert_eq!(Partition::empty().add_box_column(1), Some(p(&[1])));
        assert_eq!(Partition::empty().add_box_column(2), None);
    }

    #[test]
    fn add_box_column_succeeds_exactly_when_column_is_shorter_than_its_left() {
        for lambda in partitions_up_to(8) {
            for col in 1..=lambda.row(1) + 2 {
                let left = if col == 1 {
                    usize::MAX
                } else {
                    lambda.column_height(col - 1)
                };
                let expect = lambda.column_height(col) < left;
                let got = lambda.add_box_column(col);
                assert_eq!(got.is_some(), expect, "{lambda} col {col}");
                if let Some(mu) = got {
                    // The result covers the input: one more box, containment,
                    // and exactly one column grew by exactly one.
                    assert_eq!(mu.size(), lambda.size() + 1);
                    assert!(mu.contains(&lambda));
                    assert_eq!(mu.column_height(col), lambda.column_height(col) + 1);
                }
            }
        }
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[3, 2]).contains(&p(&[3, 1])));
        assert!(!p(&[3, 1]).contains(&p(&[2, 2])));
        assert!(p(&[1]).contains(&Partition::empty()));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for lambda in partitions_up_to(7) {
            let text = lambda.to_string();
            assert_eq!(text.parse::<Partition>().unwrap(), lambda);
        }
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        assert_eq!("(3, 1)".parse::<Partition>().unwrap(), p(&[3, 1]));
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!("3,1".parse::<Partition>().is_err());
        assert!("(3,".parse::<Partition>().is_err());
        assert!("(1,3)".parse::<Partition>().is_err());
        assert!("(3,x)".parse::<Partition>().is_err());
        let err = "(3,x)".parse::<Partition>().unwrap_err();
        assert_eq!(err.position, 3);
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!("(3,1,0)".parse::<Partition>().unwrap(), p(&[3, 1]));
    }

    #[test]
    fn partition_counts_are_the_classical_ones() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn json_form_is_a_plain_array() {
        let lambda = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&lambda).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, lambda);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}

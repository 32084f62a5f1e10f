//! Exhaustive finite checks that the rewrite rules present the operator
//! algebra.
//!
//! For a fixed alphabet size `n` and word length `l`, two partitions of the
//! set of all `n^l` words are compared: the partition into *classes* (words
//! with equal weight and alpha vectors, so equal operators) and the
//! partition into *components* of the rewrite graph (words joined by chains
//! of rule applications). The presentation result says the two coincide;
//! [`check_theorem`] verifies that and reports witnesses when they differ,
//! which happens when rule families are switched off.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partitions::partitions_up_to;
use crate::rewriting::{applicable_moves, applicable_moves_with, apply_move, RuleSet};
use crate::schur_action::apply_word;
use crate::words::{AlphaVector, WeightVector, Word};

/// Default bound on how many words a single check may enumerate.
pub const DEFAULT_MAX_ENUMERATION: usize = 200_000;

/// Knobs for [`check_theorem`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Rule families the rewrite graph may use.
    pub rules: RuleSet,
    /// Refuse to enumerate more words than this.
    pub max_enumeration: usize,
    /// Worker threads for edge generation; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Recorded in the report so runs can be reproduced.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            rules: RuleSet::all(),
            max_enumeration: DEFAULT_MAX_ENUMERATION,
            threads: None,
            seed: 0,
        }
    }
}

/// A check refused to run at the requested scale.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(
        "enumerating all {count} words of length {length} over {letters} letters \
         exceeds the cap of {cap}"
    )]
    TooManyWords { letters: usize, length: usize, count: u128, cap: usize },
}

/// How a class and a component disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// `x` and `y` define the same operator but no rule chain joins them.
    SplitClass,
    /// A rule chain joins `x` and `y` but their operators differ.
    MergedClasses,
}

/// A witness pair for a disagreement found by [`check_theorem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchPair {
    pub kind: MismatchKind,
    pub x: Word,
    pub y: Word,
}

/// The outcome of comparing classes with rewrite components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    /// Alphabet size.
    #[serde(rename = "n")]
    pub letters: usize,
    /// Word length.
    #[serde(rename = "l")]
    pub length: usize,
    /// Number of distinct (weight, alpha) classes.
    pub classes: usize,
    /// Number of connected components of the rewrite graph.
    pub components: usize,
    /// Witness pairs, empty when the partitions coincide.
    pub mismatches: Vec<MismatchPair>,
    /// Seed the run was invoked with.
    pub seed: u64,
}

impl ClassReport {
    /// Whether the two partitions coincide.
    pub fn ok(&self) -> bool {
        self.classes == self.components && self.mismatches.is_empty()
    }
}

fn checked_count(letters: usize, length: usize, cap: usize) -> Result<usize, VerifyError> {
    let count = (letters as u128)
        .checked_pow(length as u32)
        .unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(VerifyError::TooManyWords { letters, length, count, cap });
    }
    Ok(count as usize)
}

/// The word of `length` letters over `1..=letters` with lexicographic rank
/// `rank`.
fn word_at(rank: usize, letters: usize, length: usize) -> Word {
    let mut digits = vec![1; length];
    let mut r = rank;
    for p in (0..length).rev() {
        digits[p] = r % letters + 1;
        r /= letters;
    }
    debug_assert_eq!(r, 0);
    Word::from_letters(digits)
}

fn rank_of(word: &Word, letters: usize) -> usize {
    word.letters().iter().fold(0, |acc, &c| acc * letters + (c - 1))
}

/// Groups every word of the given length by its (weight, alpha) pair.
///
/// Each class lists its members in lexicographic order, and the map itself
/// is ordered, so iteration is deterministic.
pub fn enumerate_classes(
    letters: usize,
    length: usize,
    max_enumeration: usize,
) -> Result<BTreeMap<(WeightVector, AlphaVector), Vec<Word>>, VerifyError> {
    assert!(letters >= 1, "the alphabet must not be empty");
    let total = checked_count(letters, length, max_enumeration)?;
    let mut classes: BTreeMap<(WeightVector, AlphaVector), Vec<Word>> = BTreeMap::new();
    for rank in 0..total {
        let word = word_at(rank, letters, length);
        let key = (word.weight(), word.alpha());
        classes.entry(key).or_default().push(word);
    }
    Ok(classes)
}

fn run_with_threads<T: Send>(threads: Option<usize>, task: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(count) => rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build()
            .expect("building a worker pool")
            .install(task),
        None => task(),
    }
}

/// Compares (weight, alpha) classes with rewrite components over all words
/// of length `length` on the alphabet `1..=letters`.
pub fn check_theorem(
    letters: usize,
    length: usize,
    options: &VerifyOptions,
) -> Result<ClassReport, VerifyError> {
    let classes = enumerate_classes(letters, length, options.max_enumeration)?;
    let total = checked_count(letters, length, options.max_enumeration)?;

    let rules = options.rules;
    let edges: Vec<(usize, usize)> = run_with_threads(options.threads, || {
        (0..total)
            .into_par_iter()
            .flat_map_iter(|rank| {
                let word = word_at(rank, letters, length);
                applicable_moves_with(&word, &rules)
                    .iter()
                    .map(|step| {
                        let child = apply_move(&word, step).expect("generated moves apply");
                        (rank, rank_of(&child, letters))
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    });

    let mut uf = UnionFind::new(total);
    for &(a, b) in &edges {
        uf.union(a, b);
    }
    let roots: Vec<usize> = (0..total).map(|r| uf.find(r)).collect();
    let components = (0..total).filter(|&r| roots[r] == r).count();

    let mut mismatches = Vec::new();

    // A class whose members span several components: report the first two
    // components, ordered by their smallest member.
    for members in classes.values() {
        let mut seen_roots: Vec<usize> = Vec::new();
        let mut leaders: Vec<&Word> = Vec::new();
        for word in members {
            let root = roots[rank_of(word, letters)];
            if !seen_roots.contains(&root) {
                seen_roots.push(root);
                leaders.push(word);
            }
        }
        if leaders.len() >= 2 {
            mismatches.push(MismatchPair {
                kind: MismatchKind::SplitClass,
                x: leaders[0].clone(),
                y: leaders[1].clone(),
            });
        }
    }

    // A component spanning several classes: report its smallest member
    // next to the smallest member of the second class it touches.
    let mut class_of = vec![usize::MAX; total];
    for (id, members) in classes.values().enumerate() {
        for word in members {
            class_of[rank_of(word, letters)] = id;
        }
    }
    let mut first_in_root: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut reported_roots: HashSet<usize> = HashSet::new();
    for rank in 0..total {
        let root = roots[rank];
        match first_in_root.get(&root) {
            None => {
                first_in_root.insert(root, (class_of[rank], rank));
            }
            Some(&(class, first_rank))
                if class != class_of[rank] && !reported_roots.contains(&root) =>
            {
                reported_roots.insert(root);
                mismatches.push(MismatchPair {
                    kind: MismatchKind::MergedClasses,
                    x: word_at(first_rank, letters, length),
                    y: word_at(rank, letters, length),
                });
            }
            Some(_) => {}
        }
    }

    Ok(ClassReport {
        letters,
        length,
        classes: classes.len(),
        components,
        mismatches,
        seed: options.seed,
    })
}

/// Checks, for every word of length at most `max_length` over the alphabet
/// `1..=letters`, that every applicable move leaves the word's action on
/// all partitions of size at most `size_cap` unchanged.
pub fn check_action_soundness(letters: usize, max_length: usize, size_cap: usize) -> bool {
    let shapes = partitions_up_to(size_cap);
    for length in 2..=max_length {
        let total = letters.pow(length as u32);
        for rank in 0..total {
            let word = word_at(rank, letters, length);
            for step in applicable_moves(&word) {
                let child = apply_move(&word, &step).expect("generated moves apply");
                if shapes
                    .iter()
                    .any(|shape| apply_word(&word, shape) != apply_word(&child, shape))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that shifting every letter up by one carries classes to classes:
/// two words share a (weight, alpha) pair exactly when their shifts do.
pub fn check_shift_invariance(letters: usize, max_length: usize) -> bool {
    type Key = (WeightVector, AlphaVector);
    for length in 1..=max_length {
        let total = letters.pow(length as u32);
        let mut forward: HashMap<Key, Key> = HashMap::new();
        let mut backward: HashMap<Key, Key> = HashMap::new();
        for rank in 0..total {
            let word = word_at(rank, letters, length);
            let shifted = word.shift(1).expect("shifting up is safe");
            let key = (word.weight(), word.alpha());
            let shifted_key = (shifted.weight(), shifted.alpha());
            if let Some(previous) = forward.insert(key.clone(), shifted_key.clone()) {
                if previous != shifted_key {
                    return false;
                }
            }
            if let Some(previous) = backward.insert(shifted_key, key.clone()) {
                if previous != key {
                    return false;
                }
            }
        }
    }
    true
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind { parent: (0..size).collect(), rank: vec![0; size] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra] < self.rank[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        if self.rank[ra] == self.rank[rb] {
            self.rank[ra] += 1;
        }
        true
    }
}

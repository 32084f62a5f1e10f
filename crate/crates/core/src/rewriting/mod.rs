//! A rewriting system for words of column box-adding operators.
//!
//! Four families of two-sided rewrite rules generate exactly the pairs of
//! words that act identically on every partition:
//!
//! * `commute(i, j)` for `|i - j| >= 2`: `[i, j] -> [j, i]`;
//! * `knuth_a(i)`: `[i, i+1, i] -> [i+1, i, i]`;
//! * `knuth_b(i)`: `[i+1, i+1, i] -> [i+1, i, i+1]`;
//! * `braid4(i)`: `[i+1, i+2, i+1, i] -> [i+1, i+2, i, i+1]`.
//!
//! A [`RuleApplication`] names a rule, a position, and a direction; a
//! [`Derivation`] is a replayable chain of applications. [`applicable_moves`]
//! enumerates every application available in a word, in a fixed scan order,
//! which makes every search and derivation in this crate deterministic.
//!
//! The [`search`] submodule decides reachability by bidirectional search;
//! the [`derive`] submodule constructs derivations directly, without search,
//! for any pair of words that the closed-form invariants declare equal.

pub mod derive;
pub mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::words::{Letter, Word, WordError};

/// The four rule families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Commute,
    KnuthA,
    KnuthB,
    Braid4,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Commute, Family::KnuthA, Family::KnuthB, Family::Braid4];

    pub fn name(self) -> &'static str {
        match self {
            Family::Commute => "commute",
            Family::KnuthA => "knuth_a",
            Family::KnuthB => "knuth_b",
            Family::Braid4 => "braid4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "commute" => Ok(Family::Commute),
            "knuth_a" => Ok(Family::KnuthA),
            "knuth_b" => Ok(Family::KnuthB),
            "braid4" => Ok(Family::Braid4),
            other => Err(format!(
                "unknown rule family {other:?}; expected commute, knuth_a, knuth_b, or braid4"
            )),
        }
    }
}

/// A rule instance with its letter parameters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RewriteRule {
    Commute { i: Letter, j: Letter },
    KnuthA { i: Letter },
    KnuthB { i: Letter },
    Braid4 { i: Letter },
}

impl RewriteRule {
    pub fn family(&self) -> Family {
        match self {
            RewriteRule::Commute { .. } => Family::Commute,
            RewriteRule::KnuthA { .. } => Family::KnuthA,
            RewriteRule::KnuthB { .. } => Family::KnuthB,
            RewriteRule::Braid4 { .. } => Family::Braid4,
        }
    }

    /// The left-hand pattern.
    pub fn lhs(&self) -> Vec<Letter> {
        match *self {
            RewriteRule::Commute { i, j } => vec![i, j],
            RewriteRule::KnuthA { i } => vec![i, i + 1, i],
            RewriteRule::KnuthB { i } => vec![i + 1, i + 1, i],
            RewriteRule::Braid4 { i } => vec![i + 1, i + 2, i + 1, i],
        }
    }

    /// The right-hand pattern.
    pub fn rhs(&self) -> Vec<Letter> {
        match *self {
            RewriteRule::Commute { i, j } => vec![j, i],
            RewriteRule::KnuthA { i } => vec![i + 1, i, i],
            RewriteRule::KnuthB { i } => vec![i + 1, i, i + 1],
            RewriteRule::Braid4 { i } => vec![i + 1, i + 2, i, i + 1],
        }
    }

    /// How many letters the rule rewrites.
    pub fn window(&self) -> usize {
        match self {
            RewriteRule::Commute { .. } => 2,
            RewriteRule::KnuthA { .. } | RewriteRule::KnuthB { .. } => 3,
            RewriteRule::Braid4 { .. } => 4,
        }
    }

    pub fn validate(&self) -> Result<(), RuleFormatError> {
        match *self {
            RewriteRule::Commute { i, j } => {
                if i == 0 || j == 0 {
                    Err(RuleFormatError::ZeroLetter)
                } else if i.abs_diff(j) < 2 {
                    Err(RuleFormatError::LettersTooClose { i, j })
                } else {
                    Ok(())
                }
            }
            RewriteRule::KnuthA { i } | RewriteRule::KnuthB { i } | RewriteRule::Braid4 { i } => {
                if i == 0 {
                    Err(RuleFormatError::ZeroLetter)
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The same rule with every letter parameter moved by `delta`.
    pub fn shifted(&self, delta: i64) -> Result<RewriteRule, WordError> {
        let move_letter = |c: Letter| -> Result<Letter, WordError> {
            let shifted = c as i64 + delta;
            if shifted < 1 {
                Err(WordError::ShiftBelowOne { letter: c, delta })
            } else {
                Ok(shifted as Letter)
            }
        };
        Ok(match *self {
            RewriteRule::Commute { i, j } => {
                RewriteRule::Commute { i: move_letter(i)?, j: move_letter(j)? }
            }
            RewriteRule::KnuthA { i } => RewriteRule::KnuthA { i: move_letter(i)? },
            RewriteRule::KnuthB { i } => RewriteRule::KnuthB { i: move_letter(i)? },
            RewriteRule::Braid4 { i } => RewriteRule::Braid4 { i: move_letter(i)? },
        })
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RewriteRule::Commute { i, j } => write!(f, "commute({i},{j})"),
            RewriteRule::KnuthA { i } => write!(f, "knuth_a({i})"),
            RewriteRule::KnuthB { i } => write!(f, "knuth_b({i})"),
            RewriteRule::Braid4 { i } => write!(f, "braid4({i})"),
        }
    }
}

/// Which way a two-sided rule is read.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// A malformed rule.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleFormatError {
    #[error("rule letters must be at least 1")]
    ZeroLetter,
    #[error("commuting letters must differ by at least 2, got {i} and {j}")]
    LettersTooClose { i: Letter, j: Letter },
    #[error("a commute rule needs a second letter")]
    MissingSecondLetter,
    #[error("only commute rules carry a second letter")]
    UnexpectedSecondLetter,
}

/// Failure to apply a rule at a position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApplyError {
    #[error(transparent)]
    Malformed(#[from] RuleFormatError),
    #[error("a window of {window} letters at position {position} does not fit in a word of length {len}")]
    OutOfBounds { position: usize, window: usize, len: usize },
    #[error("the word reads {found:?} at position {position}, not {expected:?}")]
    WindowMismatch { position: usize, expected: Vec<Letter>, found: Vec<Letter> },
}

/// One rule applied at one position, in one direction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "RuleApplicationRepr", try_from = "RuleApplicationRepr")]
pub struct RuleApplication {
    pub rule: RewriteRule,
    pub position: usize,
    pub direction: Direction,
}

impl RuleApplication {
    pub fn new(rule: RewriteRule, position: usize, direction: Direction) -> Self {
        RuleApplication { rule, position, direction }
    }

    /// The letters that must sit at `position` for this application.
    pub fn pattern(&self) -> Vec<Letter> {
        match self.direction {
            Direction::Forward => self.rule.lhs(),
            Direction::Backward => self.rule.rhs(),
        }
    }

    /// The letters the window is replaced with.
    pub fn replacement(&self) -> Vec<Letter> {
        match self.direction {
            Direction::Forward => self.rule.rhs(),
            Direction::Backward => self.rule.lhs(),
        }
    }

    /// The application that undoes this one.
    pub fn inverted(&self) -> RuleApplication {
        RuleApplication { direction: self.direction.flipped(), ..*self }
    }

    pub fn shifted(&self, delta: i64) -> Result<RuleApplication, WordError> {
        Ok(RuleApplication { rule: self.rule.shifted(delta)?, ..*self })
    }

    fn at_offset(&self, offset: usize) -> RuleApplication {
        RuleApplication { position: self.position + offset, ..*self }
    }
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} at {}", self.rule, self.direction, self.position)
    }
}

#[derive(Serialize, Deserialize)]
struct RuleApplicationRepr {
    family: Family,
    i: Letter,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<Letter>,
    position: usize,
    direction: Direction,
}

impl From<RuleApplication> for RuleApplicationRepr {
    fn from(app: RuleApplication) -> Self {
        let (i, j) = match app.rule {
            RewriteRule::Commute { i, j } => (i, Some(j)),
            RewriteRule::KnuthA { i } | RewriteRule::KnuthB { i } | RewriteRule::Braid4 { i } => {
                (i, None)
            }
        };
        RuleApplicationRepr {
            family: app.rule.family(),
            i,
            j,
            position: app.position,
            direction: app.direction,
        }
    }
}

impl TryFrom<RuleApplicationRepr> for RuleApplication {
    type Error = RuleFormatError;

    fn try_from(repr: RuleApplicationRepr) -> Result<Self, Self::Error> {
        let rule = match (repr.family, repr.j) {
            (Family::Commute, Some(j)) => RewriteRule::Commute { i: repr.i, j },
            (Family::Commute, None) => return Err(RuleFormatError::MissingSecondLetter),
            (_, Some(_)) => return Err(RuleFormatError::UnexpectedSecondLetter),
            (Family::KnuthA, None) => RewriteRule::KnuthA { i: repr.i },
            (Family::KnuthB, None) => RewriteRule::KnuthB { i: repr.i },
            (Family::Braid4, None) => RewriteRule::Braid4 { i: repr.i },
        };
        rule.validate()?;
        Ok(RuleApplication { rule, position: repr.position, direction: repr.direction })
    }
}

/// A selection of rule families, for probing which are needed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RuleSet {
    pub commute: bool,
    pub knuth_a: bool,
    pub knuth_b: bool,
    pub braid4: bool,
}

impl RuleSet {
    pub fn all() -> Self {
        RuleSet { commute: true, knuth_a: true, knuth_b: true, braid4: true }
    }

    pub fn without(mut self, family: Family) -> Self {
        *self.slot(family) = false;
        self
    }

    pub fn with(mut self, family: Family) -> Self {
        *self.slot(family) = true;
        self
    }

    pub fn contains(&self, family: Family) -> bool {
        match family {
            Family::Commute => self.commute,
            Family::KnuthA => self.knuth_a,
            Family::KnuthB => self.knuth_b,
            Family::Braid4 => self.braid4,
        }
    }

    pub fn families(&self) -> Vec<Family> {
        Family::ALL.into_iter().filter(|&f| self.contains(f)).collect()
    }

    fn slot(&mut self, family: Family) -> &mut bool {
        match family {
            Family::Commute => &mut self.commute,
            Family::KnuthA => &mut self.knuth_a,
            Family::KnuthB => &mut self.knuth_b,
            Family::Braid4 => &mut self.braid4,
        }
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all()
    }
}

/// Every rule application available in `x`, for every family.
pub fn applicable_moves(x: &Word) -> Vec<RuleApplication> {
    applicable_moves_with(x, &RuleSet::all())
}

/// Every rule application available in `x` among the enabled families.
///
/// Moves come out in a fixed order: by position, then commute, knuth_a,
/// knuth_b, braid4, forward before backward. Commutes are only ever listed
/// forward, with the letters read off the window as it stands.
pub fn applicable_moves_with(x: &Word, rules: &RuleSet) -> Vec<RuleApplication> {
    let w = x.letters();
    let len = w.len();
    let mut out = Vec::new();
    let mut push = |rule: RewriteRule, position: usize, direction: Direction| {
        out.push(RuleApplication { rule, position, direction });
    };
    for p in 0..len {
        if rules.commute && p + 2 <= len {
            let (a, b) = (w[p], w[p + 1]);
            if a.abs_diff(b) >= 2 {
                push(RewriteRule::Commute { i: a, j: b }, p, Direction::Forward);
            }
        }
        if p + 3 <= len {
            let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
            if rules.knuth_a {
                if b == a + 1 && c == a {
                    push(RewriteRule::KnuthA { i: a }, p, Direction::Forward);
                }
                if a == b + 1 && c == b {
                    push(RewriteRule::KnuthA { i: b }, p, Direction::Backward);
                }
            }
            if rules.knuth_b {
                if a == b && a == c + 1 {
                    push(RewriteRule::KnuthB { i: c }, p, Direction::Forward);
                }
                if a == b + 1 && c == a {
                    push(RewriteRule::KnuthB { i: b }, p, Direction::Backward);
                }
            }
        }
        if rules.braid4 && p + 4 <= len {
            let (a, b, c, d) = (w[p], w[p + 1], w[p + 2], w[p + 3]);
            if a == d + 1 && b == d + 2 && c == d + 1 {
                push(RewriteRule::Braid4 { i: d }, p, Direction::Forward);
            }
            if a == c + 1 && b == c + 2 && d == c + 1 {
                push(RewriteRule::Braid4 { i: c }, p, Direction::Backward);
            }
        }
    }
    out
}

/// Applies one rule application to a word.
pub fn apply_move(x: &Word, app: &RuleApplication) -> Result<Word, ApplyError> {
    app.rule.validate()?;
    let window = app.rule.window();
    let letters = x.letters();
    if app.position + window > letters.len() {
        return Err(ApplyError::OutOfBounds {
            position: app.position,
            window,
            len: letters.len(),
        });
    }
    let expected = app.pattern();
    let found = &letters[app.position..app.position + window];
    if found != expected.as_slice() {
        return Err(ApplyError::WindowMismatch {
            position: app.position,
            expected,
            found: found.to_vec(),
        });
    }
    let mut next = letters.to_vec();
    next[app.position..app.position + window].copy_from_slice(&app.replacement());
    Ok(Word::from_letters(next))
}

/// Failure to replay a chain of applications.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivationError {
    #[error("step {step} cannot be applied: {source}")]
    BadStep {
        step: usize,
        #[source]
        source: ApplyError,
    },
    #[error("the steps end at {computed:?} but the record claims {declared:?}")]
    EndMismatch { computed: Word, declared: Word },
    #[error("cannot join: the first chain ends at {left_end:?}, the second starts at {right_start:?}")]
    JoinMismatch { left_end: Word, right_start: Word },
}

/// A validated chain of rule applications from one word to another.
///
/// Construction replays every step, so a value of this type is always a
/// genuine derivation; deserializing checks the recorded endpoint too.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "DerivationRepr")]
pub struct Derivation {
    start: Word,
    steps: Vec<RuleApplication>,
    end: Word,
}

impl Derivation {
    pub fn new(start: Word, steps: Vec<RuleApplication>) -> Result<Self, DerivationError> {
        let mut current = start.clone();
        for (idx, step) in steps.iter().enumerate() {
            current = apply_move(&current, step)
                .map_err(|source| DerivationError::BadStep { step: idx, source })?;
        }
        Ok(Derivation { start, steps, end: current })
    }

    /// The derivation with no steps.
    pub fn empty(start: Word) -> Self {
        Derivation { end: start.clone(), start, steps: Vec::new() }
    }

    pub fn start(&self) -> &Word {
        &self.start
    }

    pub fn end(&self) -> &Word {
        &self.end
    }

    pub fn steps(&self) -> &[RuleApplication] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every word along the chain, endpoints included.
    pub fn intermediates(&self) -> Vec<Word> {
        let mut words = Vec::with_capacity(self.steps.len() + 1);
        words.push(self.start.clone());
        for step in &self.steps {
            let next = apply_move(words.last().unwrap(), step)
                .expect("a constructed derivation always replays");
            words.push(next);
        }
        words
    }

    /// The reverse chain, from end to start.
    pub fn inverted(&self) -> Derivation {
        let steps = self.steps.iter().rev().map(RuleApplication::inverted).collect();
        Derivation::new(self.end.clone(), steps).expect("an inverted derivation always replays")
    }

    /// The same chain with every letter moved by `delta`.
    pub fn shifted(&self, delta: i64) -> Result<Derivation, WordError> {
        let steps = self
            .steps
            .iter()
            .map(|s| s.shifted(delta))
            .collect::<Result<Vec<_>, WordError>>()?;
        let start = self.start.shift(delta)?;
        Ok(Derivation::new(start, steps).expect("a shifted derivation always replays"))
    }

    /// Concatenates two chains whose endpoints meet.
    pub fn joined(self, next: Derivation) -> Result<Derivation, DerivationError> {
        if self.end != next.start {
            return Err(DerivationError::JoinMismatch {
                left_end: self.end,
                right_start: next.start,
            });
        }
        let mut steps = self.steps;
        steps.extend(next.steps);
        Ok(Derivation { start: self.start, steps, end: next.end })
    }
}

#[derive(Deserialize)]
struct DerivationRepr {
    start: Word,
    steps: Vec<RuleApplication>,
    end: Word,
}

impl TryFrom<DerivationRepr> for Derivation {
    type Error = DerivationError;

    fn try_from(repr: DerivationRepr) -> Result<Self, Self::Error> {
        let derivation = Derivation::new(repr.start, repr.steps)?;
        if *derivation.end() != repr.end {
            return Err(DerivationError::EndMismatch {
                computed: derivation.end,
                declared: repr.end,
            });
        }
        Ok(derivation)
    }
}

/// Accumulates a derivation step by step.
///
/// The builder is for algorithms that know each move is legal; every method
/// panics on an inapplicable move rather than returning an error.
pub struct DerivationBuilder {
    start: Word,
    current: Vec<Letter>,
    steps: Vec<RuleApplication>,
}

impl DerivationBuilder {
    pub fn new(start: Word) -> Self {
        DerivationBuilder { current: start.letters().to_vec(), start, steps: Vec::new() }
    }

    pub fn current(&self) -> &[Letter] {
        &self.current
    }

    pub fn current_word(&self) -> Word {
        Word::from_letters(self.current.clone())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies one rule; panics if the window does not match.
    pub fn apply(&mut self, rule: RewriteRule, position: usize, direction: Direction) {
        let app = RuleApplication { rule, position, direction };
        let next = apply_move(&self.current_word(), &app)
            .unwrap_or_else(|e| panic!("builder applied an illegal move: {e}"));
        self.current = next.letters().to_vec();
        self.steps.push(app);
    }

    /// Swaps the two letters at `position` and `position + 1`, which must
    /// differ by at least 2, as a forward commute.
    pub fn commute_swap(&mut self, position: usize) {
        let (i, j) = (self.current[position], self.current[position + 1]);
        self.apply(RewriteRule::Commute { i, j }, position, Direction::Forward);
    }

    /// Commutes the letter at `from` leftward until it sits at `to`.
    pub fn slide_left(&mut self, from: usize, to: usize) {
        debug_assert!(to <= from);
        for p in (to..from).rev() {
            self.commute_swap(p);
        }
    }

    /// Commutes the letter at `from` rightward until it sits at `to`.
    pub fn slide_right(&mut self, from: usize, to: usize) {
        debug_assert!(from <= to);
        for p in from..to {
            self.commute_swap(p);
        }
    }

    /// Appends a whole derivation, which must start at the current word.
    pub fn extend(&mut self, d: &Derivation) {
        assert_eq!(
            d.start().letters(),
            self.current.as_slice(),
            "extended derivation starts elsewhere"
        );
        for step in d.steps() {
            self.apply(step.rule, step.position, step.direction);
        }
    }

    /// Appends a derivation on the segment beginning at `offset`, shifting
    /// every position by `offset`. The segment must currently spell the
    /// sub-derivation's start word.
    pub fn extend_embedded(&mut self, d: &Derivation, offset: usize) {
        debug_assert_eq!(
            &self.current[offset..offset + d.start().len()],
            d.start().letters(),
            "embedded derivation starts elsewhere"
        );
        for step in d.steps() {
            let app = step.at_offset(offset);
            self.apply(app.rule, app.position, app.direction);
        }
    }

    pub fn finish(self) -> Derivation {
        Derivation {
            start: self.start,
            steps: self.steps,
            end: Word::from_letters(self.current),
        }
    }
}

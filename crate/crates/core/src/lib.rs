//! Operators that add boxes to the columns of a partition, and the
//! combinatorics of the words they spell.
//!
//! The letter `i` names the operator that adds one box to column `i` of a
//! partition when the result is still a partition and kills it otherwise.
//! Words of letters compose these operators, and surprisingly little of a
//! word matters: its weight (how many times each letter appears) together
//! with a vector of suffix statistics determines the composite operator
//! exactly. This crate implements:
//!
//! - [`partitions`]: integer partitions and box-adding ([`Partition`]);
//! - [`words`]: words, weights, and the alpha statistic ([`Word`],
//!   [`WeightVector`], [`AlphaVector`]);
//! - [`schur_action`]: the operator action, its closed form, the
//!   equivalence test, and distinguishing witnesses ([`ActionResult`]);
//! - [`tableaux`]: row insertion, reading words, and knuth equivalence
//!   ([`Tableau`], [`RskPair`]);
//! - [`rewriting`]: the four rule families presenting the operator
//!   algebra, derivations between words, search
//!   ([`rewriting::search`]), and direct construction of derivations
//!   ([`rewriting::derive`]);
//! - [`verify`]: exhaustive finite checks that classes of words match
//!   components of the rewrite graph ([`ClassReport`]).

pub mod partitions;
pub mod rewriting;
pub mod schur_action;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use partitions::Partition;
pub use rewriting::search::SearchResult;
pub use rewriting::{
    Derivation, Direction, Family, RewriteRule, RuleApplication, RuleSet,
};
pub use schur_action::ActionResult;
pub use tableaux::{RskPair, Tableau};
pub use verify::ClassReport;
pub use words::{AlphaVector, Letter, WeightVector, Word};

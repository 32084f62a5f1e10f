//! Deterministic input builders shared by the benchmark suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schur_core::{Partition, Word};

/// A reproducible word of the given length over the alphabet `1..=letters`.
pub fn random_word(letters: usize, length: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Word::from_letters((0..length).map(|_| rng.gen_range(1..=letters)).collect())
}

/// A partition whose consecutive column gaps all equal `length`, so any word
/// of that length over `1..=columns` acts on it without hitting zero.
pub fn roomy_partition(columns: usize, length: usize) -> Partition {
    let heights: Vec<usize> = (0..columns).map(|c| (columns - c) * length).collect();
    Partition::new(heights).conjugate()
}

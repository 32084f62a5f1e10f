//! Direct construction of derivations, without search.
//!
//! [`derive_structured`] produces, for any two words with equal weight and
//! alpha vectors, an explicit chain of rewrite rules joining them. It works
//! by induction on the alphabet: first it rewrites the subword of 1s and 2s
//! into the target's (two-letter words need only the two knuth families,
//! found by a small search), then it commutes letters into a canonical
//! interleaving, then it recurses on the subword of letters at least 2, and
//! finishes with commutes.
//!
//! The delicate part is replaying a move of a *subword* inside the full
//! word. Letters that differ by at least 2 commute past the interleaved
//! ones, so most windows can simply be converged around an anchor letter
//! and rewritten in place. The exceptions are windows holding two letters
//! adjacent to the interleaved alphabet — `[2, 2, 1]` among 1s-and-2s, and
//! `[2, 3, 2]` among the higher letters — which are handled by two
//! prepackaged chains ([`degree_four_macro_a`], [`degree_four_macro_b`])
//! built around the four-letter braid rule.

use super::search::{equivalent_mod_j_bfs, SearchResult};
use super::{
    apply_move, Derivation, DerivationBuilder, Direction, RewriteRule, RuleApplication,
};
use crate::schur_action::equivalent_mod_i;
use crate::tableaux::split_min_letter;
use crate::words::{Letter, Word};

pub use super::search::DEFAULT_BUDGET;

/// Why a derivation could not be built.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeriveError {
    #[error("the words are not equivalent: their weight or alpha vectors differ")]
    NotEquivalent,
    #[error("an internal search exceeded its budget of {budget} explored words")]
    Budget { budget: usize },
}

/// Why a pure-commutation derivation could not be built.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommutationError {
    #[error("the words disagree on their letters up to {pivot}")]
    LowRestrictionsDiffer { pivot: Letter },
    #[error("the words disagree on their letters from {pivot} up")]
    HighRestrictionsDiffer { pivot: Letter },
}

/// A chain from `[i+1, (i+2)^k, i+1, i]` to `[i+1, (i+2)^k, i, i+1]`.
///
/// For `k = 1` this is a single braid move. For larger `k` the inner
/// `i+1` is first bubbled leftward through the run with knuth moves, the
/// braid fires, and the run is restored, for `4k - 1` steps in all.
pub fn degree_four_macro_a(i: Letter, k: usize) -> Derivation {
    assert!(i >= 1, "rule letters start at 1");
    assert!(k >= 1, "the run must not be empty");
    let (a, b, c) = (i, i + 1, i + 2);
    let mut letters = vec![b];
    letters.extend(std::iter::repeat(c).take(k));
    letters.extend([b, a]);
    let mut bld = DerivationBuilder::new(Word::from_letters(letters));
    if k == 1 {
        bld.apply(RewriteRule::Braid4 { i }, 0, Direction::Forward);
    } else {
        for t in 0..k - 1 {
            bld.apply(RewriteRule::KnuthB { i: b }, k - 1 - t, Direction::Forward);
        }
        bld.slide_left(k + 2, 3);
        bld.apply(RewriteRule::Braid4 { i }, 0, Direction::Forward);
        bld.commute_swap(1);
        for t in 0..k - 1 {
            bld.apply(RewriteRule::KnuthB { i: b }, 2 + t, Direction::Backward);
        }
        bld.slide_right(1, k + 1);
    }
    let d = bld.finish();
    debug_assert_eq!(d.end().letters()[k + 1..], [a, b]);
    d
}

/// A chain from `[i+1, i+2, i^k, i+1]` to `[i+2, i+1, i^k, i+1]`.
///
/// The mirror-image companion of [`degree_four_macro_a`]: a single braid
/// move dressed up with knuth moves and commutes so that it swaps the two
/// leading letters across a run of `i`s.
pub fn degree_four_macro_b(i: Letter, k: usize) -> Derivation {
    assert!(i >= 1, "rule letters start at 1");
    assert!(k >= 1, "the run must not be empty");
    let (a, b, c) = (i, i + 1, i + 2);
    let mut letters = vec![b, c];
    letters.extend(std::iter::repeat(a).take(k));
    letters.push(b);
    let mut bld = DerivationBuilder::new(Word::from_letters(letters));
    if k == 1 {
        bld.apply(RewriteRule::Braid4 { i }, 0, Direction::Backward);
        bld.apply(RewriteRule::KnuthA { i: b }, 0, Direction::Forward);
        bld.apply(RewriteRule::KnuthB { i: a }, 1, Direction::Forward);
    } else {
        bld.slide_right(1, k + 1);
        for t in 0..k - 1 {
            bld.apply(RewriteRule::KnuthA { i: a }, t, Direction::Backward);
        }
        bld.commute_swap(k);
        bld.apply(RewriteRule::Braid4 { i }, k - 1, Direction::Backward);
        bld.apply(RewriteRule::KnuthA { i: b }, k - 1, Direction::Forward);
        bld.apply(RewriteRule::KnuthB { i: a }, k, Direction::Forward);
        bld.slide_left(k - 1, 0);
        for t in 0..k - 1 {
            bld.apply(RewriteRule::KnuthA { i: a }, k - 1 - t, Direction::Forward);
        }
    }
    let d = bld.finish();
    debug_assert_eq!(d.end().letters()[..2], [c, b]);
    d
}

/// A derivation between two words made of commutes alone.
///
/// Exists whenever the words agree on their subword of letters `<= pivot`
/// and on their subword of letters `>= pivot`. Each remaining letter is
/// matched to its target position and adjacent inversions are bubbled out;
/// every swap crosses a letter below the pivot with one above it, which
/// always commutes.
pub fn commutation_derive(
    x: &Word,
    y: &Word,
    pivot: Letter,
) -> Result<Derivation, CommutationError> {
    let hi = x.max_letter().max(y.max_letter()).max(pivot);
    if x.restrict(1, pivot).unwrap() != y.restrict(1, pivot).unwrap() {
        return Err(CommutationError::LowRestrictionsDiffer { pivot });
    }
    if x.restrict(pivot, hi).unwrap() != y.restrict(pivot, hi).unwrap() {
        return Err(CommutationError::HighRestrictionsDiffer { pivot });
    }

    let low_targets: Vec<usize> =
        y.letters().iter().enumerate().filter(|(_, &c)| c <= pivot).map(|(p, _)| p).collect();
    let high_targets: Vec<usize> =
        y.letters().iter().enumerate().filter(|(_, &c)| c >= pivot).map(|(p, _)| p).collect();
    let (mut next_low, mut next_high) = (0, 0);
    let mut targets = Vec::with_capacity(x.len());
    for &c in x.letters() {
        if c < pivot {
            targets.push(low_targets[next_low]);
            next_low += 1;
        } else if c > pivot {
            targets.push(high_targets[next_high]);
            next_high += 1;
        } else {
            let t = low_targets[next_low];
            debug_assert_eq!(t, high_targets[next_high]);
            next_low += 1;
            next_high += 1;
            targets.push(t);
        }
    }

    let mut bld = DerivationBuilder::new(x.clone());
    loop {
        let mut swapped = false;
        for p in 0..targets.len().saturating_sub(1) {
            if targets[p] > targets[p + 1] {
                bld.commute_swap(p);
                targets.swap(p, p + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    debug_assert_eq!(bld.current(), y.letters());
    Ok(bld.finish())
}

/// Builds an explicit rewrite chain between any two equivalent words.
pub fn derive_structured(x: &Word, y: &Word) -> Result<Derivation, DeriveError> {
    derive_structured_with(x, y, DEFAULT_BUDGET)
}

/// Builds an explicit rewrite chain, capping every internal search at
/// `budget` explored words.
///
/// Searches only ever run on two-letter subwords, so the budget matters
/// only for words whose subword on two adjacent letters is itself long.
pub fn derive_structured_with(
    x: &Word,
    y: &Word,
    budget: usize,
) -> Result<Derivation, DeriveError> {
    if !equivalent_mod_i(x, y) {
        return Err(DeriveError::NotEquivalent);
    }
    if x == y {
        return Ok(Derivation::empty(x.clone()));
    }
    // Equal weights mean equal letter sets; slide both down so 1 is used.
    let delta = x.min_letter() as i64 - 1;
    let x0 = x.shift(-delta).expect("shifting down to the floor is safe");
    let y0 = y.shift(-delta).expect("shifting down to the floor is safe");
    let derivation = derive_normalized(&x0, &y0, budget)?;
    Ok(derivation.shifted(delta).expect("shifting back up is safe"))
}

fn derive_normalized(x: &Word, y: &Word, budget: usize) -> Result<Derivation, DeriveError> {
    debug_assert!(equivalent_mod_i(x, y));
    debug_assert_eq!(x.min_letter(), 1);
    let n = x.max_letter();
    if n <= 2 {
        // Two-letter words: the two knuth families alone join the class.
        return match equivalent_mod_j_bfs(x, y, budget) {
            SearchResult::Found(d) => Ok(d),
            SearchResult::NotFound => {
                unreachable!("equivalent two-letter words are joined by knuth moves")
            }
            SearchResult::BudgetExceeded => Err(DeriveError::Budget { budget }),
        };
    }

    let mut bld = DerivationBuilder::new(x.clone());

    // Stage 1: rewrite the subword of 1s and 2s into the target's.
    let x_small = x.restrict(1, 2).unwrap();
    let y_small = y.restrict(1, 2).unwrap();
    if x_small != y_small {
        let path = match equivalent_mod_j_bfs(&x_small, &y_small, budget) {
            SearchResult::Found(d) => d,
            SearchResult::NotFound => {
                unreachable!("equivalent two-letter subwords are joined by knuth moves")
            }
            SearchResult::BudgetExceeded => return Err(DeriveError::Budget { budget }),
        };
        let mut expected = x_small;
        for step in path.steps() {
            lift_small_move(&mut bld, step, budget)?;
            expected = apply_move(&expected, step).unwrap();
            debug_assert_eq!(bld.current_word().restrict(1, 2).unwrap(), expected);
        }
    }

    // Stage 2: commute into the canonical interleaving, which parks each
    // run of 1s directly after the 2 that opens it.
    let z = interleaving_target(&bld.current_word());
    let to_z = commutation_derive(&bld.current_word(), &z, 2)
        .expect("the interleaving target shares both subwords");
    bld.extend(&to_z);

    // Stage 3: recursively rewrite the subword of letters >= 2.
    let z_big = z.restrict(2, n).unwrap();
    let y_big = y.restrict(2, n).unwrap();
    if z_big != y_big {
        debug_assert!(equivalent_mod_i(&z_big, &y_big));
        let big_path = derive_structured_with(&z_big, &y_big, budget)?;
        let mut expected = z_big;
        for step in big_path.steps() {
            lift_big_move(&mut bld, step, budget)?;
            expected = apply_move(&expected, step).unwrap();
            debug_assert_eq!(bld.current_word().restrict(2, n).unwrap(), expected);
        }
    }

    // Stage 4: both subwords now match the target; commute into place.
    let last = commutation_derive(&bld.current_word(), y, 2)
        .expect("both subwords agree after the first three stages");
    bld.extend(&last);

    let d = bld.finish();
    debug_assert_eq!(d.end(), y);
    Ok(d)
}

/// The word with the same two subwords as `w` in which every run of 1s
/// follows the 2 that precedes it in the low subword.
fn interleaving_target(w: &Word) -> Word {
    let mut big_segments: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut one_runs: Vec<usize> = vec![0];
    for &c in w.letters() {
        if c == 1 {
            *one_runs.last_mut().unwrap() += 1;
        } else if c == 2 {
            big_segments.push(Vec::new());
            one_runs.push(0);
        } else {
            big_segments.last_mut().unwrap().push(c);
        }
    }
    let mut letters = Vec::with_capacity(w.len());
    for (t, segment) in big_segments.iter().enumerate() {
        if t > 0 {
            letters.push(2);
        }
        letters.extend(segment.iter().copied());
        letters.extend(std::iter::repeat(1).take(one_runs[t]));
    }
    debug_assert_eq!(letters.len(), w.len());
    Word::from_letters(letters)
}

/// Replays one move of the subword of 1s and 2s inside the full word.
fn lift_small_move(
    bld: &mut DerivationBuilder,
    step: &RuleApplication,
    budget: usize,
) -> Result<(), DeriveError> {
    let positions: Vec<usize> = bld
        .current()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c <= 2)
        .map(|(p, _)| p)
        .collect();
    let q = step.position;
    let f = [positions[q], positions[q + 1], positions[q + 2]];
    match (step.rule, step.direction) {
        (RewriteRule::KnuthA { i: 1 }, Direction::Forward) => {
            // [1, 2, 1]: both 1s commute with everything between them and
            // the middle 2; converge and fire.
            bld.slide_right(f[0], f[1] - 1);
            bld.slide_left(f[2], f[1] + 1);
            bld.apply(RewriteRule::KnuthA { i: 1 }, f[1] - 1, Direction::Forward);
        }
        (RewriteRule::KnuthA { i: 1 }, Direction::Backward) => {
            // [2, 1, 1]: converge the 1s onto the 2.
            bld.slide_left(f[1], f[0] + 1);
            bld.slide_left(f[2], f[0] + 2);
            bld.apply(RewriteRule::KnuthA { i: 1 }, f[0], Direction::Backward);
        }
        (RewriteRule::KnuthB { i: 1 }, Direction::Forward) => {
            chain_a_to_b(bld, f[0], f[1], f[2], budget)?;
        }
        (RewriteRule::KnuthB { i: 1 }, Direction::Backward) => {
            // Put the 1 beside the trailing 2, then play the forward chain
            // from the matching source word backwards.
            let (f1, f3) = (f[0], f[2]);
            bld.slide_right(f[1], f3 - 1);
            let mut scratch = bld.current().to_vec();
            scratch.swap(f3 - 1, f3);
            let mut fwd = DerivationBuilder::new(Word::from_letters(scratch));
            chain_a_to_b(&mut fwd, f1, f3 - 1, f3, budget)?;
            let fwd = fwd.finish();
            debug_assert_eq!(fwd.end().letters(), bld.current());
            bld.extend(&fwd.inverted());
        }
        _ => unreachable!("two-letter search paths use knuth moves at letter 1"),
    }
    Ok(())
}

/// Rewrites the window `2 .. 2 1` (positions `f1 < f2 < f3` in the current
/// word, everything between being letters >= 3) so that its subword of 1s
/// and 2s goes from `[2, 2, 1]` to `[2, 1, 2]`.
fn chain_a_to_b(
    bld: &mut DerivationBuilder,
    f1: usize,
    f2: usize,
    f3: usize,
    budget: usize,
) -> Result<(), DeriveError> {
    let m: Vec<Letter> = bld.current()[f1 + 1..f2].to_vec();
    if m.is_empty() {
        bld.slide_left(f3, f2 + 1);
        bld.apply(RewriteRule::KnuthB { i: 1 }, f1, Direction::Forward);
        return Ok(());
    }
    let k = m.iter().filter(|&&c| c == 3).count();
    if k == 0 {
        // No 3s: the 2s commute with all of `m`, so squeeze the window
        // together on the left, fire, and let `m` flow back past it.
        bld.slide_left(f2, f1 + 1);
        bld.slide_left(f3, f1 + 2);
        bld.apply(RewriteRule::KnuthB { i: 1 }, f1, Direction::Forward);
        for t in 0..m.len() {
            bld.slide_left(f1 + 3 + t, f1 + 1 + t);
        }
        return Ok(());
    }

    // `m` holds 3s, which block the 2s. Knuth-rewrite `m` into its split
    // form (3s contiguous), shed the residue on both sides, and drive the
    // braid macro through the exposed run of 3s.
    let m_word = Word::from_letters(m);
    let m_split = split_min_letter(&m_word);
    let path = match equivalent_mod_j_bfs(&m_word, &m_split, budget) {
        SearchResult::Found(d) => d,
        SearchResult::NotFound => {
            unreachable!("a word always reaches the reading word of its insertion tableau")
        }
        SearchResult::BudgetExceeded => return Err(DeriveError::Budget { budget }),
    };
    bld.extend_embedded(&path, f1 + 1);
    let first3 = m_split.letters().iter().position(|&c| c == 3).unwrap();
    let prefix = first3;
    let suffix = m_split.len() - prefix - k;
    debug_assert!(m_split.letters()[prefix..prefix + k].iter().all(|&c| c == 3));

    for t in 0..prefix {
        bld.commute_swap(f1 + t);
    }
    let s = f1 + prefix;
    for t in 0..suffix {
        bld.commute_swap(f2 - 1 - t);
    }
    let p2 = f2 - suffix;
    debug_assert_eq!(p2, s + k + 1);
    bld.slide_left(f3, p2 + 1);

    bld.extend_embedded(&degree_four_macro_a(1, k), s);

    for t in 0..suffix {
        bld.commute_swap(s + k + 2 + t);
    }
    bld.slide_right(s + k + 1, s + k + 1 + suffix);
    for t in (0..prefix).rev() {
        bld.commute_swap(f1 + t);
    }
    bld.extend_embedded(&path.inverted(), f1 + 1);
    Ok(())
}

/// Replays one move of the subword of letters >= 2 inside the full word,
/// where the interleaved letters are all 1s.
fn lift_big_move(
    bld: &mut DerivationBuilder,
    step: &RuleApplication,
    _budget: usize,
) -> Result<(), DeriveError> {
    let positions: Vec<usize> = bld
        .current()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c >= 2)
        .map(|(p, _)| p)
        .collect();
    let window = step.rule.window();
    let f = &positions[step.position..step.position + window];
    let pattern = step.pattern();
    debug_assert!(f.iter().zip(&pattern).all(|(&p, &c)| bld.current()[p] == c));

    if step.rule == (RewriteRule::KnuthA { i: 2 }) {
        lift_knuth_a_two(bld, step.direction, f);
        return Ok(());
    }

    // At most one window letter equals 2 (the letter that cannot cross the
    // 1s); keep it fixed as the anchor and converge the rest onto it.
    let anchor = pattern.iter().position(|&c| c == 2).unwrap_or(0);
    for t in (0..anchor).rev() {
        bld.slide_right(f[t], f[anchor] - (anchor - t));
    }
    for t in anchor + 1..window {
        bld.slide_left(f[t], f[anchor] + (t - anchor));
    }
    bld.apply(step.rule, f[anchor] - anchor, step.direction);
    Ok(())
}

/// The two-2 window `[2, 3, 2]` (or `[3, 2, 2]` backward): neither 2 can
/// cross the 1s between them, so the move runs through the braid macro.
fn lift_knuth_a_two(bld: &mut DerivationBuilder, direction: Direction, f: &[usize]) {
    match direction {
        Direction::Forward => {
            let (f1, f2, f3) = (f[0], f[1], f[2]);
            bld.slide_left(f2, f1 + 1);
            let k = f3 - f1 - 2;
            if k == 0 {
                bld.apply(RewriteRule::KnuthA { i: 2 }, f1, Direction::Forward);
            } else {
                bld.extend_embedded(&degree_four_macro_b(1, k), f1);
            }
        }
        Direction::Backward => {
            let (f1, f2, f3) = (f[0], f[1], f[2]);
            bld.slide_right(f1, f2 - 1);
            let k = f3 - f2 - 1;
            if k == 0 {
                bld.apply(RewriteRule::KnuthA { i: 2 }, f2 - 1, Direction::Backward);
            } else {
                bld.extend_embedded(&degree_four_macro_b(1, k).inverted(), f2 - 1);
            }
        }
    }
}

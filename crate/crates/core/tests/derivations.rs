//! End-to-end checks of the derivation engine: the worked eight-letter
//! example passes through its published waypoints, every small class is
//! joined, and each rule family is genuinely needed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_core::rewriting::derive::{derive_structured, derive_structured_with};
use schur_core::rewriting::search::{equivalent_mod_j_bfs_with, SearchResult};
use schur_core::rewriting::{applicable_moves, apply_move, Family, RuleSet};
use schur_core::verify::{check_theorem, enumerate_classes, VerifyOptions};
use schur_core::words::Word;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn worked_example_passes_its_waypoints() {
    let x = w("23443231");
    let y = w("23443132");
    let d = derive_structured(&x, &y).unwrap();
    assert_eq!(d.len(), 21);
    let through = d.intermediates();
    // The first stage rewrites the low subword 221 into 212, pivoting
    // around the braid move; these are its landmarks.
    assert_eq!(through[2], w("24334231"));
    assert_eq!(through[6], w("42332143"));
    assert_eq!(through[13], w("42331243"));
    assert_eq!(through[16], w("24334123"));
    // The canonical interleaving separates the two stages.
    assert_eq!(through[18], w("23443123"));
    assert_eq!(through[21], y);
}

#[test]
fn derive_output_is_deterministic() {
    let x = w("23443231");
    let y = w("23443132");
    let d1 = derive_structured(&x, &y).unwrap();
    let d2 = derive_structured_with(&x, &y, 10_000_000).unwrap();
    assert_eq!(d1, d2);
}

#[test]
fn derivations_join_every_small_class() {
    for (letters, max_len) in [(3, 5), (4, 4)] {
        for length in 1..=max_len {
            let classes = enumerate_classes(letters, length, 100_000).unwrap();
            for members in classes.values() {
                let base = &members[0];
                for other in &members[1..] {
                    let d = derive_structured(base, other).unwrap_or_else(|e| {
                        panic!("no derivation from {base} to {other}: {e}")
                    });
                    assert_eq!(d.start(), base);
                    assert_eq!(d.end(), other);
                }
            }
        }
    }
}

#[test]
fn derivations_join_longer_random_walks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..200 {
        let len = rng.gen_range(0..=14);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=6)).collect();
        let x = Word::from_letters(letters);
        let mut y = x.clone();
        for _ in 0..rng.gen_range(0..=10) {
            let moves = applicable_moves(&y);
            if moves.is_empty() {
                break;
            }
            y = apply_move(&y, &moves[rng.gen_range(0..moves.len())]).unwrap();
        }
        let d = derive_structured(&x, &y).expect("walk endpoints derive");
        assert_eq!(*d.start(), x);
        assert_eq!(*d.end(), y);
    }
}

#[test]
fn each_rule_family_is_necessary() {
    // For each family, a scale at which dropping it disconnects a class.
    let cases = [
        (Family::Commute, 3, 2),
        (Family::KnuthA, 2, 3),
        (Family::KnuthB, 2, 3),
        (Family::Braid4, 3, 4),
    ];
    for (family, letters, length) in cases {
        let full = check_theorem(letters, length, &VerifyOptions::default()).unwrap();
        assert!(full.ok(), "full rule set must pass at ({letters},{length})");
        let options = VerifyOptions {
            rules: RuleSet::all().without(family),
            ..VerifyOptions::default()
        };
        let report = check_theorem(letters, length, &options).unwrap();
        assert!(
            !report.ok(),
            "dropping {family} must split a class at ({letters},{length})"
        );
        assert!(report.components > report.classes);
    }
}

#[test]
fn minimal_split_pairs_for_each_family() {
    let cases = [
        (Family::Commute, "13", "31"),
        (Family::KnuthA, "121", "211"),
        (Family::KnuthB, "221", "212"),
        (Family::Braid4, "2321", "2312"),
    ];
    for (family, x, y) in cases {
        let (x, y) = (w(x), w(y));
        let full = equivalent_mod_j_bfs_with(&x, &y, &RuleSet::all(), 100_000);
        assert!(matches!(full, SearchResult::Found(_)), "{family}: joined with all rules");
        let partial =
            equivalent_mod_j_bfs_with(&x, &y, &RuleSet::all().without(family), 100_000);
        assert!(
            matches!(partial, SearchResult::NotFound),
            "{family}: {x} and {y} must separate without it"
        );
    }
}

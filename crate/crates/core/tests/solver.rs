//! The completion solver against a naive backtracking oracle.

mod common;

use common::{naive_completions, random_partial};
use latinset::completion::completes_top_down_by_search;
use latinset::{complete_unique, completes_top_down, count_completions, strong_complete, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn unique_completion_agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut unique, mut several, mut none) = (0, 0, 0);
    for _ in 0..1000 {
        let square = random_partial(&mut rng);
        let oracle = naive_completions(&square, 2);
        match (complete_unique(&square), oracle.len()) {
            (Ok(done), 1) => {
                assert_eq!(done, oracle[0], "{square}");
                unique += 1;
            }
            (Err(Error::NotUnique { first, second }), 2) => {
                assert_ne!(first, second);
                assert!(square.is_subset_of(&first) && square.is_subset_of(&second));
                several += 1;
            }
            (Err(Error::NoCompletion), 0) => none += 1,
            (got, count) => panic!("{square}: solver {got:?}, oracle {count}"),
        }
        assert_eq!(count_completions(&square, 2), oracle.len(), "{square}");
    }
    // The generator should exercise all three outcomes.
    assert!(unique > 50 && several > 50 && none > 10, "{unique} {several} {none}");
}

#[test]
fn counts_agree_with_oracle_up_to_cap() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let square = random_partial(&mut rng);
        if square.order() > 5 {
            continue;
        }
        assert_eq!(count_completions(&square, 50), naive_completions(&square, 50).len(), "{square}");
    }
}

#[test]
fn strong_success_implies_uniqueness() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut strong = 0;
    for _ in 0..1000 {
        let square = random_partial(&mut rng);
        if let Ok(trace) = strong_complete(&square) {
            let oracle = naive_completions(&square, 2);
            assert_eq!(oracle.len(), 1, "{square}");
            assert_eq!(trace.result, oracle[0]);
            strong += 1;
        }
    }
    assert!(strong > 50, "{strong}");
}

#[test]
fn top_down_readings_agree_on_random_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let square = random_partial(&mut rng);
        let Ok(saturate) = completes_top_down(&square) else {
            continue;
        };
        if saturate.completes {
            assert!(strong_complete(&square).is_ok(), "{square}");
            assert_eq!(saturate.trace.result, naive_completions(&square, 2)[0]);
            assert!(completes_top_down_by_search(&square).unwrap().completes, "{square}");
        }
    }
}

#[test]
fn missing_row_has_one_completion() {
    let l3 = latinset::two_group::build_l(3).unwrap();
    let rect = l3.iter().copied().filter(|t| t.row < 7);
    let square = latinset::PartialLatinSquare::from_triples(8, rect).unwrap();
    assert_eq!(count_completions(&square, 5), 1);
}

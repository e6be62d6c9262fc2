//! Randomised invariants of squares, the solver and Algorithm A.

mod common;

use common::{naive_completions, random_full};
use latinset::completion::{alternatives, Region};
use latinset::format::{parse_grid, render_grid, render_marked};
use latinset::trades::{is_trade_pair, trade_from_squares};
use latinset::{
    compose_blocks, completes_top_down, count_completions, gcs, ggcs, is_critical_set, strong_complete, CellOrder,
    Isotopism, PartialLatinSquare, Triple,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Any set of triples inside an order-`n` square, latin or not.
fn raw_triples() -> impl Strategy<Value = (usize, Vec<(usize, usize, usize)>)> {
    (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n, 0..n), 0..=n * n)))
}

/// A partial latin square: random triples, keeping each one that fits.
fn partial() -> impl Strategy<Value = PartialLatinSquare> {
    raw_triples().prop_map(|(n, triples)| {
        triples.into_iter().fold(PartialLatinSquare::empty(n), |sq, (r, c, e)| {
            sq.with_entry(Triple::new(r, c, e)).unwrap_or(sq)
        })
    })
}

fn full(max: usize) -> impl Strategy<Value = PartialLatinSquare> {
    (1usize..=max, any::<u64>()).prop_map(|(n, seed)| random_full(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

/// A full square and a random subset of it.
fn full_and_subset(max: usize) -> impl Strategy<Value = (PartialLatinSquare, PartialLatinSquare)> {
    (full(max), any::<u64>(), 0.0f64..1.0).prop_map(|(l, seed, keep)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kept: Vec<Triple> = l.iter().copied().filter(|_| rng.gen_bool(keep)).collect();
        let sub = PartialLatinSquare::from_triples(l.order(), kept).unwrap();
        (l, sub)
    })
}

fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn random_isotopism(rng: &mut ChaCha8Rng, n: usize) -> Isotopism {
    Isotopism::new(permutation(rng, n), permutation(rng, n), permutation(rng, n)).unwrap()
}

fn is_latin(n: usize, triples: &[(usize, usize, usize)]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for &(r, c, e) in triples {
        let fresh = [("cell", r, c), ("row", r, e), ("col", c, e)]
            .iter()
            .all(|&key| !seen.contains(&key) || !triples.iter().any(|&t| t != (r, c, e) && clash(key, t)));
        if !fresh {
            return false;
        }
        seen.insert(("cell", r, c));
        seen.insert(("row", r, e));
        seen.insert(("col", c, e));
    }
    triples.iter().all(|&(r, c, e)| r < n && c < n && e < n)
}

fn clash((kind, a, b): (&str, usize, usize), (r, c, e): (usize, usize, usize)) -> bool {
    match kind {
        "cell" => (r, c) == (a, b),
        "row" => (r, e) == (a, b),
        _ => (c, e) == (a, b),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn constructor_rejects_exactly_the_non_latin_sets((n, triples) in raw_triples()) {
        let mut distinct = triples.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let built = PartialLatinSquare::from_triples(n, distinct.iter().map(|&(r, c, e)| Triple::new(r, c, e)));
        prop_assert_eq!(built.is_ok(), is_latin(n, &distinct));
    }

    #[test]
    fn row_major_order_is_total(a in (0usize..8, 0usize..8, 0usize..8), b in (0usize..8, 0usize..8, 0usize..8)) {
        let (x, y) = (Triple::new(a.0, a.1, a.2), Triple::new(b.0, b.1, b.2));
        let ll = |p: Triple, q: Triple| p.row < q.row || (p.row == q.row && p.col <= q.col);
        prop_assert_eq!(x <= y, ll(x, y) && (x.cell() != y.cell() || x.sym <= y.sym));
        if x.cell() != y.cell() {
            prop_assert!(ll(x, y) != ll(y, x));
        }
    }

    #[test]
    fn isotopisms_preserve_and_invert(sq in partial(), seed in any::<u64>()) {
        let n = sq.order();
        let iso = random_isotopism(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let image = sq.apply(&iso).unwrap();
        prop_assert_eq!(image.len(), sq.len());
        prop_assert_eq!(image.apply(&iso.inverse()).unwrap(), sq.clone());
        prop_assert!(iso.then(&iso.inverse()).is_identity());
    }

    #[test]
    fn blocks_compose_and_split(a in full(4), seed in any::<u64>(), keep in 0.0f64..1.0) {
        let n = a.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (b, d) = (random_full(&mut rng, n), random_full(&mut rng, n));
        let blocks = [&a, &b, &a, &d].map(|l| {
            let kept: Vec<Triple> = l.iter().copied().filter(|_| rng.gen_bool(keep)).collect();
            PartialLatinSquare::from_triples(n, kept).unwrap()
        });
        let whole = compose_blocks([
            (&blocks[0]).into(),
            blocks[1].shift_symbols(1),
            blocks[2].shift_symbols(1),
            (&blocks[3]).into(),
        ]).unwrap();
        prop_assert_eq!(whole.len(), blocks.iter().map(PartialLatinSquare::len).sum::<usize>());
        for (q, (i, j)) in [(0, 0), (0, n), (n, 0), (n, n)].into_iter().enumerate() {
            let (block, band) = whole.rebase(i, j, n).unwrap();
            prop_assert_eq!(&block, &blocks[q]);
            if !block.is_empty() {
                prop_assert_eq!(band, usize::from(q == 1 || q == 2));
            }
        }
    }

    #[test]
    fn shifts_add(sq in partial(), a in 0usize..4, b in 0usize..4) {
        let n = sq.order();
        let twice: Vec<Triple> = sq
            .shift_symbols(a)
            .triples()
            .map(|t| Triple::new(t.row, t.col, t.sym + n * b))
            .collect();
        let once: Vec<Triple> = sq.shift_symbols(a + b).triples().collect();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn self_similarity_is_identity(sq in partial()) {
        let w = sq.is_similar(&sq).unwrap();
        prop_assert!(w.is_identity());
    }

    #[test]
    fn grid_text_round_trips(sq in partial()) {
        let doc = parse_grid(&render_grid(&sq)).unwrap();
        prop_assert_eq!(&doc.square, &sq);
        prop_assert!(doc.marked.is_none());
        prop_assert_eq!(latinset::format::from_json(&latinset::format::to_json(&sq)).unwrap(), sq);
    }

    #[test]
    fn marked_grid_round_trips((l, c) in full_and_subset(6)) {
        let doc = parse_grid(&render_marked(&l, &c)).unwrap();
        prop_assert_eq!(doc.square, l);
        prop_assert_eq!(doc.marked.unwrap_or_else(|| PartialLatinSquare::empty(c.order())), c);
    }

    #[test]
    fn alternatives_shrink_as_entries_are_added((l, c) in full_and_subset(6), pick in any::<prop::sample::Index>()) {
        let missing: Vec<Triple> = l.iter().copied().filter(|t| !c.contains(t)).collect();
        prop_assume!(!missing.is_empty());
        let bigger = c.with_entry(missing[pick.index(missing.len())]).unwrap();
        let region = Region::all(l.order());
        let (before, after) = (alternatives(&c, &region).unwrap(), alternatives(&bigger, &region).unwrap());
        for ((cell, old), (_, new)) in before.iter().zip(after.iter()) {
            prop_assert!((new - old).is_empty(), "{:?}", cell);
        }
    }

    #[test]
    fn strong_completion_implies_unique(sq in partial()) {
        if let Ok(trace) = strong_complete(&sq) {
            prop_assert_eq!(count_completions(&sq, 2), 1);
            prop_assert_eq!(vec![trace.result], naive_completions(&sq, 2));
        }
    }

    #[test]
    fn top_down_implies_strong((_, c) in full_and_subset(6)) {
        if completes_top_down(&c).is_ok_and(|td| td.completes) {
            prop_assert!(strong_complete(&c).is_ok());
        }
    }

    #[test]
    fn algorithm_a_is_critical_and_idempotent(l in full(5), seed in any::<u64>()) {
        let f = CellOrder::random(l.order(), seed);
        let c = ggcs(&l, &f).unwrap();
        prop_assert!(is_critical_set(&c));
        prop_assert!(c.is_subset_of(&l));
        prop_assert_eq!(ggcs(&c, &f).unwrap(), c.clone());
        prop_assert_eq!(ggcs(&c, &CellOrder::f0(l.order())).unwrap(), c);
    }

    #[test]
    fn default_order_leaves_last_row_and_column_empty(l in full(6)) {
        let n = l.order();
        let c = gcs(&l).unwrap();
        if n > 1 {
            prop_assert!(c.iter().all(|t| t.row < n - 1 && t.col < n - 1));
        }
    }

    #[test]
    fn trades_between_squares(a in full(6), seed in any::<u64>()) {
        let n = a.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let syms = Isotopism::new((0..n).collect(), (0..n).collect(), permutation(&mut rng, n)).unwrap();
        let b = a.apply(&syms).unwrap();
        prop_assume!(a != b);
        let pair = trade_from_squares(&a, &b).unwrap();
        prop_assert!(is_trade_pair(pair.trade(), pair.mate()));
    }
}


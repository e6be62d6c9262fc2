//! Helpers shared by the integration tests: a deliberately naive
//! completion counter used as an oracle, and random partial squares.

#![allow(dead_code)]

use latinset::{Isotopism, PartialLatinSquare, Triple};
use rand::seq::SliceRandom;
use rand::Rng;

/// `α_{k,k'} L_s`.
pub fn swapped_l(s: usize, k: usize, k2: usize) -> PartialLatinSquare {
    let l = latinset::two_group::build_l(s).unwrap();
    l.apply(&Isotopism::row_swap(1 << s, k, k2).unwrap()).unwrap()
}

/// Completions of `square`, found by plain backtracking over a dense
/// array, stopping once `cap` are known.
pub fn naive_completions(square: &PartialLatinSquare, cap: usize) -> Vec<PartialLatinSquare> {
    let n = square.order();
    let mut grid: Vec<Vec<Option<usize>>> =
        (0..n).map(|r| (0..n).map(|c| square.get(r, c)).collect()).collect();
    let mut found = Vec::new();
    fill(&mut grid, n, cap, &mut found);
    found
}

fn allowed(grid: &[Vec<Option<usize>>], n: usize, r: usize, c: usize, e: usize) -> bool {
    (0..n).all(|j| grid[r][j] != Some(e)) && (0..n).all(|i| grid[i][c] != Some(e))
}

fn fill(grid: &mut Vec<Vec<Option<usize>>>, n: usize, cap: usize, found: &mut Vec<PartialLatinSquare>) {
    if found.len() >= cap {
        return;
    }
    // The empty cell with fewest options, so dead squares fail fast.
    let mut best: Option<((usize, usize), Vec<usize>)> = None;
    for r in 0..n {
        for c in 0..n {
            if grid[r][c].is_some() {
                continue;
            }
            let options: Vec<usize> = (0..n).filter(|&e| allowed(grid, n, r, c, e)).collect();
            if best.as_ref().is_none_or(|(_, b)| options.len() < b.len()) {
                best = Some(((r, c), options));
            }
        }
    }
    let Some(((r, c), options)) = best else {
        let rows: Vec<Vec<Option<usize>>> = grid.clone();
        found.push(PartialLatinSquare::from_rows(&rows).unwrap());
        return;
    };
    for e in options {
        grid[r][c] = Some(e);
        fill(grid, n, cap, found);
        grid[r][c] = None;
        if found.len() >= cap {
            return;
        }
    }
}

/// A random latin square of order `n`: a random isotope of the cyclic
/// square, or of `L_2` at order 4 half the time.
pub fn random_full(rng: &mut impl Rng, n: usize) -> PartialLatinSquare {
    let base = if n == 4 && rng.gen_bool(0.5) {
        latinset::two_group::build_l(2).unwrap()
    } else {
        PartialLatinSquare::from_triples(n, (0..n).flat_map(|r| (0..n).map(move |c| Triple::new(r, c, (r + c) % n))))
            .unwrap()
    };
    let mut perm = || {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    };
    let iso = Isotopism::new(perm(), perm(), perm()).unwrap();
    base.apply(&iso).unwrap()
}

/// A random partial latin square of order 1..=6. Half are subsets of a
/// full square (always completable); the rest are built by placing random
/// legal entries, which may leave no completion.
pub fn random_partial(rng: &mut impl Rng) -> PartialLatinSquare {
    let n = rng.gen_range(1..=6);
    if rng.gen_bool(0.5) {
        let full = random_full(rng, n);
        let keep = rng.gen_range(0.2..1.0);
        let kept: Vec<Triple> = full.iter().copied().filter(|_| rng.gen_bool(keep)).collect();
        return PartialLatinSquare::from_triples(n, kept).unwrap();
    }
    let target = rng.gen_range(0..=n * n / 2);
    let mut square = PartialLatinSquare::empty(n);
    let mut cells: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    cells.shuffle(rng);
    for (r, c) in cells.into_iter().take(target) {
        let e = rng.gen_range(0..n);
        if let Ok(next) = square.with_entry(Triple::new(r, c, e)) {
            square = next;
        }
    }
    square
}

//! Algorithm A: scan the entries of a uniquely completable square in a
//! fixed order and drop every entry whose removal keeps the completion
//! unique. The survivors form a critical set.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::completion::{complete_unique, Engine};
use crate::error::{Error, Result};
use crate::square::{PartialLatinSquare, MAX_ORDER};

/// A ranking of cells: `cells()[i - 1]` is the cell of rank `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellOrder {
    order: usize,
    cells: Vec<(usize, usize)>,
}

impl CellOrder {
    /// Bottom row first, each row right to left, ending at `(0, 0)`.
    pub fn f0(n: usize) -> Self {
        let cells = (1..=n * n)
            .map(|i| (n - 1 - (i - 1) / n, n - 1 - (i - 1) % n))
            .collect();
        CellOrder { order: n, cells }
    }

    /// `i ↦ (⌊(i−1)/n⌋, (n − i) mod n)` taken literally: the top row first,
    /// each row right to left.
    pub fn f0_literal(n: usize) -> Self {
        let cells = (1..=n * n)
            .map(|i| ((i - 1) / n, (n * n - i) % n))
            .collect();
        CellOrder { order: n, cells }
    }

    /// A uniformly random ranking, reproducible from `seed`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut cells: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
        cells.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        CellOrder { order: n, cells }
    }

    /// Any list of distinct in-range cells. Cells left out are never
    /// visited.
    pub fn from_cells(n: usize, cells: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n * n];
        for &(r, c) in &cells {
            if r >= n || c >= n {
                return Err(Error::Range(format!("cell ({r},{c}) outside order {n}")));
            }
            if std::mem::replace(&mut seen[r * n + c], true) {
                return Err(Error::Range(format!("cell ({r},{c}) ranked twice")));
            }
        }
        Ok(CellOrder { order: n, cells })
    }

    pub fn reversed(&self) -> Self {
        let mut cells = self.cells.clone();
        cells.reverse();
        CellOrder {
            order: self.order,
            cells,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// The cell of rank `i`, counting from 1.
    pub fn rank(&self, i: usize) -> Option<(usize, usize)> {
        i.checked_sub(1).and_then(|i| self.cells.get(i).copied())
    }
}

/// `ggcs(P, f)`.
///
/// Every entry of `square` must be ranked by `f`; unranked empty cells are
/// ignored.
pub fn ggcs(square: &PartialLatinSquare, f: &CellOrder) -> Result<PartialLatinSquare> {
    let n = square.order();
    if f.order != n {
        return Err(Error::Range(format!(
            "cell order for {} applied to order {n}",
            f.order
        )));
    }
    complete_unique(square).map_err(|_| Error::NotUniquelyCompletable)?;
    let ranked = f.cells.iter().filter(|&&(r, c)| square.is_filled(r, c)).count();
    if ranked != square.len() {
        return Err(Error::Range("cell order misses a filled cell".into()));
    }
    debug_assert!(n <= MAX_ORDER);

    let mut engine = Engine::new(square);
    for &(r, c) in &f.cells {
        let Some(z) = engine.clear(r, c) else {
            continue;
        };
        // Removal keeps the completion unique iff no completion puts a
        // different symbol at (r, c).
        if engine.has_completion_avoiding(r, c, z) {
            engine.set(r, c, z);
        }
    }
    Ok(engine.to_square())
}

/// `gcs(L) = ggcs(L, f_0)`.
pub fn gcs(square: &PartialLatinSquare) -> Result<PartialLatinSquare> {
    if !square.is_full() {
        return Err(Error::NotFull);
    }
    ggcs(square, &CellOrder::f0(square.order()))
}

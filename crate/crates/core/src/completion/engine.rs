//! Bitmask backtracking search over latin square completions.
//!
//! State is a grid plus six families of masks so that every constraint of
//! the three-dimensional exact cover (cell, row-symbol, column-symbol) can be
//! evaluated with a couple of word operations. Placements are recorded on a
//! trail and undone in reverse.

use crate::square::{PartialLatinSquare, Triple};
use crate::symbols::Bits;

const EMPTY: u8 = u8::MAX;

#[derive(Clone)]
pub(crate) struct Engine {
    n: usize,
    full: u64,
    grid: Vec<u8>,
    /// Symbols present in each row / column.
    row_syms: Vec<u64>,
    col_syms: Vec<u64>,
    /// Empty columns of each row, empty rows of each column.
    row_free: Vec<u64>,
    col_free: Vec<u64>,
    /// Columns / rows where each symbol is already placed.
    sym_cols: Vec<u64>,
    sym_rows: Vec<u64>,
    trail: Vec<(u8, u8)>,
}

impl Engine {
    pub fn new(square: &PartialLatinSquare) -> Self {
        let n = square.order();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut engine = Engine {
            n,
            full,
            grid: vec![EMPTY; n * n],
            row_syms: vec![0; n],
            col_syms: vec![0; n],
            row_free: vec![full; n],
            col_free: vec![full; n],
            sym_cols: vec![0; n],
            sym_rows: vec![0; n],
            trail: Vec::with_capacity(n * n),
        };
        for t in square.iter() {
            engine.place(t.row, t.col, t.sym);
        }
        engine.trail.clear();
        engine
    }

    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        match self.grid[r * self.n + c] {
            EMPTY => None,
            e => Some(e as usize),
        }
    }

    #[inline]
    pub fn candidates(&self, r: usize, c: usize) -> u64 {
        self.full & !(self.row_syms[r] | self.col_syms[c])
    }

    #[inline]
    pub fn place(&mut self, r: usize, c: usize, e: usize) {
        debug_assert_eq!(self.grid[r * self.n + c], EMPTY);
        debug_assert!(self.candidates(r, c) & (1 << e) != 0);
        self.grid[r * self.n + c] = e as u8;
        self.row_syms[r] |= 1 << e;
        self.col_syms[c] |= 1 << e;
        self.row_free[r] &= !(1 << c);
        self.col_free[c] &= !(1 << r);
        self.sym_cols[e] |= 1 << c;
        self.sym_rows[e] |= 1 << r;
        self.trail.push((r as u8, c as u8));
    }

    /// Clears a cell outside the trail discipline. Only valid when no
    /// trail entries are outstanding.
    pub fn clear(&mut self, r: usize, c: usize) -> Option<usize> {
        let e = self.get(r, c)?;
        self.lift(r, c, e);
        Some(e)
    }

    /// Places a value outside the trail discipline, the inverse of
    /// [`Engine::clear`].
    pub fn set(&mut self, r: usize, c: usize, e: usize) {
        self.place(r, c, e);
        self.trail.pop();
    }

    #[inline]
    fn lift(&mut self, r: usize, c: usize, e: usize) {
        self.grid[r * self.n + c] = EMPTY;
        self.row_syms[r] &= !(1 << e);
        self.col_syms[c] &= !(1 << e);
        self.row_free[r] |= 1 << c;
        self.col_free[c] |= 1 << r;
        self.sym_cols[e] &= !(1 << c);
        self.sym_rows[e] &= !(1 << r);
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (r, c) = self.trail.pop().expect("trail above mark");
            let (r, c) = (r as usize, c as usize);
            let e = self.grid[r * self.n + c] as usize;
            self.lift(r, c, e);
        }
    }

    /// Places every forced value until a fixpoint. Returns `false` on a
    /// contradiction; placements stay on the trail either way.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        loop {
            let mut progress = false;
            for r in 0..n {
                for c in Bits::new(self.row_free[r]) {
                    if self.row_free[r] & (1 << c) == 0 {
                        continue;
                    }
                    let cand = self.candidates(r, c);
                    if cand == 0 {
                        return false;
                    }
                    if cand & (cand - 1) == 0 {
                        self.place(r, c, cand.trailing_zeros() as usize);
                        progress = true;
                    }
                }
            }
            for r in 0..n {
                for e in Bits::new(self.full & !self.row_syms[r]) {
                    if self.row_syms[r] & (1 << e) != 0 {
                        continue;
                    }
                    let spots = self.row_free[r] & !self.sym_cols[e];
                    if spots == 0 {
                        return false;
                    }
                    if spots & (spots - 1) == 0 {
                        self.place(r, spots.trailing_zeros() as usize, e);
                        progress = true;
                    }
                }
            }
            for c in 0..n {
                for e in Bits::new(self.full & !self.col_syms[c]) {
                    if self.col_syms[c] & (1 << e) != 0 {
                        continue;
                    }
                    let spots = self.col_free[c] & !self.sym_rows[e];
                    if spots == 0 {
                        return false;
                    }
                    if spots & (spots - 1) == 0 {
                        self.place(spots.trailing_zeros() as usize, c, e);
                        progress = true;
                    }
                }
            }
            if !progress {
                return true;
            }
        }
    }

    /// Empty cell with fewest candidates, ties broken by the least cell.
    fn choose(&self) -> Option<(usize, usize, u64)> {
        let mut best: Option<(usize, usize, u64)> = None;
        let mut best_len = u32::MAX;
        for r in 0..self.n {
            for c in Bits::new(self.row_free[r]) {
                let cand = self.candidates(r, c);
                let len = cand.count_ones();
                if len < best_len {
                    best = Some((r, c, cand));
                    best_len = len;
                    if len <= 2 {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Counts completions of the current state, stopping at `cap`. Each
    /// completion found is passed to `visit`. The state is restored on
    /// return.
    pub fn search<F: FnMut(&Engine)>(&mut self, cap: usize, visit: &mut F) -> usize {
        let mut found = 0;
        if cap > 0 {
            self.descend(cap, &mut found, visit);
        }
        found
    }

    fn descend<F: FnMut(&Engine)>(&mut self, cap: usize, found: &mut usize, visit: &mut F) {
        let mark = self.mark();
        if self.propagate() {
            match self.choose() {
                None => {
                    *found += 1;
                    visit(self);
                }
                Some((r, c, cand)) => {
                    for e in Bits::new(cand) {
                        let inner = self.mark();
                        self.place(r, c, e);
                        self.descend(cap, found, visit);
                        self.undo_to(inner);
                        if *found >= cap {
                            break;
                        }
                    }
                }
            }
        }
        self.undo_to(mark);
    }

    pub fn count(&mut self, cap: usize) -> usize {
        self.search(cap, &mut |_| {})
    }

    pub fn to_square(&self) -> PartialLatinSquare {
        let n = self.n;
        let triples = (0..n).flat_map(|r| {
            (0..n).filter_map(move |c| self.get(r, c).map(|e| Triple::new(r, c, e)))
        });
        PartialLatinSquare::from_triples(n, triples).expect("engine keeps latin constraints")
    }

    /// Whether some completion differs from the current state's cell
    /// `(r, c)` being `avoid`. The cell must be empty.
    pub fn has_completion_avoiding(&mut self, r: usize, c: usize, avoid: usize) -> bool {
        let others = self.candidates(r, c) & !(1u64 << avoid);
        for e in Bits::new(others) {
            let mark = self.mark();
            self.place(r, c, e);
            let found = self.count(1);
            self.undo_to(mark);
            if found > 0 {
                return true;
            }
        }
        false
    }
}

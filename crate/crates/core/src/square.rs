//! Partial latin squares as immutable values.
//!
//! Rows, columns and symbols are always `0..n`. Subsquares keep absolute
//! coordinates; [`PartialLatinSquare::rebase`] moves a block back to the
//! origin when a caller needs it as a square of its own.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ClashKind, Error, Result};
use crate::isotopism::Isotopism;
use crate::symbols::SymbolSet;

/// Largest supported order. Candidate sets are packed into a `u64`.
pub const MAX_ORDER: usize = 64;

const EMPTY: u8 = u8::MAX;

/// One filled cell `(row, col; sym)`.
///
/// The derived ordering is row-major, which is exactly the `≪` order on the
/// entries of a partial latin square (no two entries share a cell).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub row: usize,
    pub col: usize,
    pub sym: usize,
}

impl Triple {
    pub const fn new(row: usize, col: usize, sym: usize) -> Self {
        Triple { row, col, sym }
    }

    pub fn cell(&self) -> (usize, usize) {
        (self.row, self.col)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.row, self.col, self.sym)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An order-`n` array in which every symbol occurs at most once per row and
/// once per column.
#[derive(Clone)]
pub struct PartialLatinSquare {
    order: usize,
    /// Sorted by `≪`.
    entries: Vec<Triple>,
    grid: Vec<u8>,
}

impl PartialEq for PartialLatinSquare {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.entries == other.entries
    }
}

impl Eq for PartialLatinSquare {}

impl std::hash::Hash for PartialLatinSquare {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.entries.hash(state);
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::Range(format!(
            "order {order} outside 1..={MAX_ORDER}"
        )));
    }
    Ok(())
}

impl PartialLatinSquare {
    /// The empty square of the given order.
    ///
    /// Panics if `order` is 0 or larger than [`MAX_ORDER`].
    pub fn empty(order: usize) -> Self {
        check_order(order).expect("invalid order");
        PartialLatinSquare {
            order,
            entries: Vec::new(),
            grid: vec![EMPTY; order * order],
        }
    }

    /// Builds a square from triples, rejecting any violation of the three
    /// latin constraints. Exact duplicate triples are merged.
    pub fn from_triples<I>(order: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        check_order(order)?;
        let n = order;
        let mut grid = vec![EMPTY; n * n];
        // (row, sym) -> col and (col, sym) -> row
        let mut row_sym = vec![EMPTY; n * n];
        let mut col_sym = vec![EMPTY; n * n];
        let mut entries = Vec::new();
        for t in triples {
            if t.row >= n || t.col >= n || t.sym >= n {
                return Err(Error::Range(format!("{t} does not fit order {n}")));
            }
            let cell = t.row * n + t.col;
            if grid[cell] != EMPTY {
                if grid[cell] as usize == t.sym {
                    continue;
                }
                let first = Triple::new(t.row, t.col, grid[cell] as usize);
                return Err(Error::Conflict {
                    kind: ClashKind::Cell,
                    first,
                    second: t,
                });
            }
            let rs = t.row * n + t.sym;
            if row_sym[rs] != EMPTY {
                let first = Triple::new(t.row, row_sym[rs] as usize, t.sym);
                return Err(Error::Conflict {
                    kind: ClashKind::Row,
                    first,
                    second: t,
                });
            }
            let cs = t.col * n + t.sym;
            if col_sym[cs] != EMPTY {
                let first = Triple::new(col_sym[cs] as usize, t.col, t.sym);
                return Err(Error::Conflict {
                    kind: ClashKind::Column,
                    first,
                    second: t,
                });
            }
            grid[cell] = t.sym as u8;
            row_sym[rs] = t.col as u8;
            col_sym[cs] = t.row as u8;
            entries.push(t);
        }
        entries.sort_unstable();
        Ok(PartialLatinSquare {
            order,
            entries,
            grid,
        })
    }

    /// Builds a square from row-major cell contents, `None` for empty cells.
    pub fn from_rows(rows: &[Vec<Option<usize>>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Range("rows of unequal length".into()));
        }
        let triples = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(c, e)| e.map(|e| Triple::new(r, c, e)))
        });
        Self::from_triples(n, triples)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of filled cells.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() == self.order * self.order
    }

    /// Entries in `≪` order.
    pub fn entries(&self) -> &[Triple] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Triple> {
        self.entries.iter()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        if row >= self.order || col >= self.order {
            return None;
        }
        match self.grid[row * self.order + col] {
            EMPTY => None,
            e => Some(e as usize),
        }
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.get(t.row, t.col) == Some(t.sym)
    }

    pub fn is_filled(&self, row: usize, col: usize) -> bool {
        self.get(row, col).is_some()
    }

    /// The shape: filled cells in `≪` order.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.entries.iter().map(Triple::cell).collect()
    }

    /// Symbols present in row `row`.
    pub fn row_symbols(&self, row: usize) -> SymbolSet {
        (0..self.order).filter_map(|c| self.get(row, c)).collect()
    }

    /// Symbols present in column `col`.
    pub fn col_symbols(&self, col: usize) -> SymbolSet {
        (0..self.order).filter_map(|r| self.get(r, col)).collect()
    }

    pub fn least_element(&self) -> Result<Triple> {
        self.entries.first().copied().ok_or(Error::EmptySquare)
    }

    pub fn greatest_element(&self) -> Result<Triple> {
        self.entries.last().copied().ok_or(Error::EmptySquare)
    }

    pub fn is_subset_of(&self, other: &PartialLatinSquare) -> bool {
        self.order == other.order && self.entries.iter().all(|t| other.contains(t))
    }

    /// The same square with one more entry.
    pub fn with_entry(&self, t: Triple) -> Result<Self> {
        Self::from_triples(self.order, self.entries.iter().copied().chain([t]))
    }

    /// The square with the entry in cell `(row, col)` removed, if any.
    pub fn without_cell(&self, row: usize, col: usize) -> Self {
        let mut out = self.clone();
        if let Some(pos) = out.entries.iter().position(|t| t.cell() == (row, col)) {
            out.entries.remove(pos);
            out.grid[row * self.order + col] = EMPTY;
        }
        out
    }

    /// Entries of `self` that are not entries of `other`.
    pub fn difference(&self, other: &PartialLatinSquare) -> Self {
        let kept = self.entries.iter().copied().filter(|t| !other.contains(t));
        Self::from_triples(self.order, kept).expect("subset of a latin square is latin")
    }

    pub fn union(&self, other: &PartialLatinSquare) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::Range(format!(
                "orders {} and {} differ",
                self.order, other.order
            )));
        }
        Self::from_triples(self.order, self.iter().chain(other.iter()).copied())
    }

    /// `P^r`: every symbol raised by `n·r`. The result lives in a larger
    /// symbol range and is consumed by [`compose_blocks`],
    /// [`PartialLatinSquare::place_subsquare`] or [`Shifted::into_square`].
    pub fn shift_symbols(&self, r: usize) -> Shifted<'_> {
        Shifted {
            square: self,
            shift: r,
        }
    }

    /// `Q^k_{i,j}(P)`: entries inside the `k×k` window at `(i, j)`, kept at
    /// their absolute coordinates.
    pub fn subsquare(&self, i: usize, j: usize, k: usize) -> Result<Self> {
        if i + k > self.order || j + k > self.order {
            return Err(Error::Range(format!(
                "window {k}x{k} at ({i},{j}) exceeds order {}",
                self.order
            )));
        }
        let inside = self
            .entries
            .iter()
            .copied()
            .filter(|t| (i..i + k).contains(&t.row) && (j..j + k).contains(&t.col));
        Self::from_triples(self.order, inside)
    }

    /// Moves the `k×k` window at `(i, j)` to an order-`k` square.
    ///
    /// The window's symbols must all lie in one band `mk..mk+k`; the band
    /// index `m` is returned alongside the rebased square.
    pub fn rebase(&self, i: usize, j: usize, k: usize) -> Result<(Self, usize)> {
        let window = self.subsquare(i, j, k)?;
        let band = window.entries.first().map_or(0, |t| t.sym / k);
        if let Some(t) = window.entries.iter().find(|t| t.sym / k != band) {
            return Err(Error::Range(format!(
                "symbol of {t} outside band {}..{}",
                band * k,
                band * k + k
            )));
        }
        let moved = window
            .entries
            .iter()
            .map(|t| Triple::new(t.row - i, t.col - j, t.sym - band * k));
        Ok((Self::from_triples(k, moved)?, band))
    }

    /// Places `block` with its top-left corner at `(i, j)`. The target
    /// window must be empty.
    pub fn place_subsquare(&self, i: usize, j: usize, block: Shifted<'_>) -> Result<Self> {
        let k = block.square.order;
        if i + k > self.order || j + k > self.order {
            return Err(Error::Range(format!(
                "block of order {k} at ({i},{j}) exceeds order {}",
                self.order
            )));
        }
        for r in i..i + k {
            for c in j..j + k {
                if let Some(e) = self.get(r, c) {
                    if let Some(new) = block.get(r - i, c - j) {
                        return Err(Error::Conflict {
                            kind: ClashKind::Cell,
                            first: Triple::new(r, c, e),
                            second: Triple::new(r, c, new),
                        });
                    }
                }
            }
        }
        let placed = block
            .triples()
            .map(|t| Triple::new(t.row + i, t.col + j, t.sym));
        Self::from_triples(self.order, self.entries.iter().copied().chain(placed))
    }

    /// `(α, β; γ)P`.
    pub fn apply(&self, iso: &Isotopism) -> Result<Self> {
        if iso.degree() != self.order {
            return Err(Error::Range(format!(
                "isotopism of degree {} applied to order {}",
                iso.degree(),
                self.order
            )));
        }
        Self::from_triples(self.order, self.entries.iter().map(|t| iso.map(*t)))
    }

    /// Searches for monotone row and column maps and a symbol bijection with
    /// `self = (α, β, γ) other`.
    ///
    /// Monotone bijections between the occupied rows (columns) are unique, so
    /// only the symbol map has to be discovered.
    pub fn is_similar(&self, other: &PartialLatinSquare) -> Option<Similarity> {
        if self.len() != other.len() {
            return None;
        }
        let occupied = |sq: &PartialLatinSquare, by_row: bool| {
            let mut v: Vec<usize> = sq
                .entries
                .iter()
                .map(|t| if by_row { t.row } else { t.col })
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let (rows_p, rows_q) = (occupied(self, true), occupied(other, true));
        let (cols_p, cols_q) = (occupied(self, false), occupied(other, false));
        if rows_p.len() != rows_q.len() || cols_p.len() != cols_q.len() {
            return None;
        }
        let rows: Vec<(usize, usize)> = rows_q.iter().copied().zip(rows_p).collect();
        let cols: Vec<(usize, usize)> = cols_q.iter().copied().zip(cols_p).collect();
        let lookup = |map: &[(usize, usize)], x: usize| {
            map.binary_search_by_key(&x, |&(from, _)| from)
                .map(|i| map[i].1)
                .expect("occupied label")
        };

        let mut forward: Vec<(usize, usize)> = Vec::new();
        for t in &other.entries {
            let target = self.get(lookup(&rows, t.row), lookup(&cols, t.col))?;
            match forward.iter().find(|&&(from, _)| from == t.sym) {
                Some(&(_, to)) if to != target => return None,
                Some(_) => {}
                None => {
                    if forward.iter().any(|&(_, to)| to == target) {
                        return None;
                    }
                    forward.push((t.sym, target));
                }
            }
        }
        forward.sort_unstable();
        Some(Similarity {
            rows,
            cols,
            symbols: forward,
        })
    }
}

/// Witness for `P ≈ Q`: each list maps a label of `Q` to a label of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Similarity {
    pub rows: Vec<(usize, usize)>,
    pub cols: Vec<(usize, usize)>,
    pub symbols: Vec<(usize, usize)>,
}

impl Similarity {
    pub fn is_identity(&self) -> bool {
        [&self.rows, &self.cols, &self.symbols]
            .iter()
            .all(|m| m.iter().all(|(a, b)| a == b))
    }
}

/// A square with all symbols raised by `order · shift`.
#[derive(Clone, Copy)]
pub struct Shifted<'a> {
    square: &'a PartialLatinSquare,
    shift: usize,
}

impl<'a> From<&'a PartialLatinSquare> for Shifted<'a> {
    fn from(square: &'a PartialLatinSquare) -> Self {
        Shifted { square, shift: 0 }
    }
}

impl<'a> Shifted<'a> {
    pub fn order(&self) -> usize {
        self.square.order
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    fn offset(&self) -> usize {
        self.square.order * self.shift
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.square.get(row, col).map(|e| e + self.offset())
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + 'a {
        let offset = self.offset();
        self.square
            .entries
            .iter()
            .map(move |t| Triple::new(t.row, t.col, t.sym + offset))
    }

    /// Materialises the shifted entries in a square of order `ambient`.
    pub fn into_square(self, ambient: usize) -> Result<PartialLatinSquare> {
        PartialLatinSquare::from_triples(ambient, self.triples())
    }
}

/// The order-`2n` square with `blocks = [top-left, top-right, bottom-left,
/// bottom-right]`, each of order `n`.
pub fn compose_blocks(blocks: [Shifted<'_>; 4]) -> Result<PartialLatinSquare> {
    let n = blocks[0].order();
    if blocks.iter().any(|b| b.order() != n) {
        return Err(Error::Range("blocks of unequal order".into()));
    }
    let offsets = [(0, 0), (0, n), (n, 0), (n, n)];
    let triples = blocks.iter().zip(offsets).flat_map(|(b, (dr, dc))| {
        b.triples()
            .map(move |t| Triple::new(t.row + dr, t.col + dc, t.sym))
    });
    PartialLatinSquare::from_triples(2 * n, triples)
}

impl fmt::Debug for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PartialLatinSquare(order {}, size {})", self.order, self.len())?;
        f.write_str(&crate::format::render_grid(self))
    }
}

impl fmt::Display for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::render_grid(self))
    }
}

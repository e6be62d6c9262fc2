//! Arrays of alternatives, completion counting, unique and strong
//! completion, and top-down completion.

mod engine;

pub(crate) use engine::Engine;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::square::{PartialLatinSquare, Triple};
use crate::symbols::SymbolSet;

/// A rectangular cell region `rows × cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Region {
    pub fn new(rows: impl IntoIterator<Item = usize>, cols: impl IntoIterator<Item = usize>) -> Self {
        let mut rows: Vec<usize> = rows.into_iter().collect();
        let mut cols: Vec<usize> = cols.into_iter().collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        Region { rows, cols }
    }

    pub fn all(n: usize) -> Self {
        Region::new(0..n, 0..n)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.rows.binary_search(&r).is_ok() && self.cols.binary_search(&c).is_ok()
    }

    /// Cells in `≪` order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .flat_map(move |&r| self.cols.iter().map(move |&c| (r, c)))
    }

    fn fits(&self, n: usize) -> Result<()> {
        match self.rows.iter().chain(&self.cols).find(|&&x| x >= n) {
            Some(x) => Err(Error::Range(format!("region index {x} outside order {n}"))),
            None => Ok(()),
        }
    }
}

/// Per-cell candidate symbols over a region: empty for filled cells,
/// otherwise every symbol absent from the cell's row and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativesGrid {
    region: Region,
    candidates: Vec<SymbolSet>,
}

impl AlternativesGrid {
    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn get(&self, r: usize, c: usize) -> Option<SymbolSet> {
        let i = self.region.rows.binary_search(&r).ok()?;
        let j = self.region.cols.binary_search(&c).ok()?;
        Some(self.candidates[i * self.region.cols.len() + j])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), SymbolSet)> + '_ {
        self.region.cells().zip(self.candidates.iter().copied())
    }

    /// Table equality after relabelling: rows and columns matched in order,
    /// symbols by any bijection.
    ///
    /// Two symbols are interchangeable exactly when they occur in the same
    /// set of (relative) cells, so a bijection exists iff the multisets of
    /// per-symbol occurrence patterns agree.
    pub fn is_similar_to(&self, other: &AlternativesGrid) -> bool {
        if self.region.rows.len() != other.region.rows.len()
            || self.region.cols.len() != other.region.cols.len()
        {
            return false;
        }
        let sizes = |g: &AlternativesGrid| g.candidates.iter().map(|s| s.len()).collect::<Vec<_>>();
        if sizes(self) != sizes(other) {
            return false;
        }
        let patterns = |g: &AlternativesGrid| {
            let mut by_symbol: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for (i, set) in g.candidates.iter().enumerate() {
                for e in set.iter() {
                    by_symbol.entry(e).or_default().push(i);
                }
            }
            let mut v: Vec<Vec<usize>> = by_symbol.into_values().collect();
            v.sort();
            v
        };
        patterns(self) == patterns(other)
    }
}

/// `A(P, S)`: row/column elimination only, no lookahead.
pub fn alternatives(square: &PartialLatinSquare, region: &Region) -> Result<AlternativesGrid> {
    let n = square.order();
    region.fits(n)?;
    let row_syms: Vec<SymbolSet> = (0..n).map(|r| square.row_symbols(r)).collect();
    let col_syms: Vec<SymbolSet> = (0..n).map(|c| square.col_symbols(c)).collect();
    let candidates = region
        .cells()
        .map(|(r, c)| {
            if square.is_filled(r, c) {
                SymbolSet::EMPTY
            } else {
                SymbolSet::full(n) - (row_syms[r] | col_syms[c])
            }
        })
        .collect();
    Ok(AlternativesGrid {
        region: region.clone(),
        candidates,
    })
}

/// Number of latin squares containing `square`, saturating at `cap`.
pub fn count_completions(square: &PartialLatinSquare, cap: usize) -> usize {
    Engine::new(square).count(cap)
}

/// The unique completion of `square`.
pub fn complete_unique(square: &PartialLatinSquare) -> Result<PartialLatinSquare> {
    let mut found = Vec::with_capacity(2);
    Engine::new(square).search(2, &mut |e| found.push(e.to_square()));
    let mut found = found.into_iter();
    match (found.next(), found.next()) {
        (None, _) => Err(Error::NoCompletion),
        (Some(only), None) => Ok(only),
        (Some(first), Some(second)) => Err(Error::NotUnique {
            first: Box::new(first),
            second: Box::new(second),
        }),
    }
}

pub fn is_uniquely_completable(square: &PartialLatinSquare) -> bool {
    count_completions(square, 2) == 1
}

/// A fill sequence `P = P_0 ⊂ P_1 ⊂ … ⊂ P_m` where each step filled a cell
/// whose candidate set was a singleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionTrace {
    pub steps: Vec<Triple>,
    pub result: PartialLatinSquare,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    steps: Vec<[usize; 3]>,
}

impl CompletionTrace {
    pub fn to_json(&self) -> String {
        let doc = TraceJson {
            steps: self.steps.iter().map(|t| [t.row, t.col, t.sym]).collect(),
        };
        serde_json::to_string(&doc).expect("plain data serialises")
    }

    /// Replays a JSON step list on top of `start`.
    pub fn from_json(start: &PartialLatinSquare, text: &str) -> Result<Self> {
        let doc: TraceJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let steps: Vec<Triple> = doc.steps.iter().map(|&[r, c, e]| Triple::new(r, c, e)).collect();
        let result = PartialLatinSquare::from_triples(
            start.order(),
            start.iter().copied().chain(steps.iter().copied()),
        )?;
        Ok(CompletionTrace { steps, result })
    }
}

/// Working grid for singleton propagation.
struct Filler {
    n: usize,
    grid: Vec<Option<usize>>,
    row_syms: Vec<SymbolSet>,
    col_syms: Vec<SymbolSet>,
    steps: Vec<Triple>,
}

impl Filler {
    fn new(square: &PartialLatinSquare) -> Self {
        let n = square.order();
        let mut f = Filler {
            n,
            grid: vec![None; n * n],
            row_syms: vec![SymbolSet::EMPTY; n],
            col_syms: vec![SymbolSet::EMPTY; n],
            steps: Vec::new(),
        };
        for t in square.iter() {
            f.set(t.row, t.col, t.sym);
        }
        f
    }

    fn set(&mut self, r: usize, c: usize, e: usize) {
        self.grid[r * self.n + c] = Some(e);
        self.row_syms[r].insert(e);
        self.col_syms[c].insert(e);
    }

    fn fill(&mut self, r: usize, c: usize, e: usize) {
        self.set(r, c, e);
        self.steps.push(Triple::new(r, c, e));
    }

    fn candidates(&self, r: usize, c: usize) -> SymbolSet {
        SymbolSet::full(self.n) - (self.row_syms[r] | self.col_syms[c])
    }

    /// Fills singleton cells among `cells` until none remain. Returns
    /// whether every listed cell ended up filled.
    fn saturate(&mut self, cells: &[(usize, usize)]) -> bool {
        loop {
            let mut progress = false;
            let mut open = false;
            for &(r, c) in cells {
                if self.grid[r * self.n + c].is_some() {
                    continue;
                }
                match self.candidates(r, c).single() {
                    Some(e) => {
                        self.fill(r, c, e);
                        progress = true;
                    }
                    None => open = true,
                }
            }
            if !open {
                return true;
            }
            if !progress {
                return false;
            }
        }
    }

    fn into_trace(self) -> CompletionTrace {
        let n = self.n;
        let triples = self
            .grid
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|e| Triple::new(i / n, i % n, e)));
        let result = PartialLatinSquare::from_triples(n, triples)
            .expect("singleton fills respect latin constraints");
        CompletionTrace {
            steps: self.steps,
            result,
        }
    }
}

/// Repeatedly fills cells with a single candidate until the square is full.
pub fn strong_complete(square: &PartialLatinSquare) -> Result<CompletionTrace> {
    strong_complete_region(square, &Region::all(square.order()))
}

/// Singleton propagation restricted to `region`; candidates are still
/// computed against the whole square. Succeeds when every cell of the
/// region is filled.
pub fn strong_complete_region(square: &PartialLatinSquare, region: &Region) -> Result<CompletionTrace> {
    region.fits(square.order())?;
    let cells: Vec<(usize, usize)> = region.cells().collect();
    let mut filler = Filler::new(square);
    let done = filler.saturate(&cells);
    let trace = filler.into_trace();
    if done {
        Ok(trace)
    } else {
        Err(Error::Stuck {
            trace: Box::new(trace),
        })
    }
}

/// Outcome of a top-down check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopDown {
    pub completes: bool,
    /// First row that could not be extended, if any.
    pub stuck_row: Option<usize>,
    pub trace: CompletionTrace,
}

/// Rows are extended in increasing order. Row `i` must fill completely by
/// singleton propagation inside the row, given `square` and every row
/// already completed above it.
pub fn completes_top_down(square: &PartialLatinSquare) -> Result<TopDown> {
    if !is_uniquely_completable(square) {
        return Err(Error::NotUniquelyCompletable);
    }
    let n = square.order();
    let mut filler = Filler::new(square);
    let mut stuck_row = None;
    for r in 0..n {
        let row: Vec<(usize, usize)> = (0..n).map(|c| (r, c)).collect();
        if !filler.saturate(&row) {
            stuck_row = Some(r);
            break;
        }
    }
    Ok(TopDown {
        completes: stuck_row.is_none(),
        stuck_row,
        trace: filler.into_trace(),
    })
}

/// Top-down check where a row counts as determined when the row alone has
/// exactly one legal filling (a unique perfect matching of its empty cells
/// to its missing symbols), ignoring whether the rest of the square can be
/// completed afterwards.
pub fn completes_top_down_by_search(square: &PartialLatinSquare) -> Result<TopDown> {
    if !is_uniquely_completable(square) {
        return Err(Error::NotUniquelyCompletable);
    }
    let n = square.order();
    let mut filler = Filler::new(square);
    let mut stuck_row = None;
    for r in 0..n {
        let empty: Vec<usize> = (0..n).filter(|&c| filler.grid[r * n + c].is_none()).collect();
        let options: Vec<SymbolSet> = empty.iter().map(|&c| filler.candidates(r, c)).collect();
        let mut fills = Vec::new();
        let mut current = Vec::with_capacity(empty.len());
        row_matchings(&options, SymbolSet::EMPTY, &mut current, &mut fills, 2);
        if fills.len() != 1 {
            stuck_row = Some(r);
            break;
        }
        for (&c, &e) in empty.iter().zip(&fills[0]) {
            filler.fill(r, c, e);
        }
    }
    Ok(TopDown {
        completes: stuck_row.is_none(),
        stuck_row,
        trace: filler.into_trace(),
    })
}

fn row_matchings(
    options: &[SymbolSet],
    used: SymbolSet,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    let i = current.len();
    if i == options.len() {
        out.push(current.clone());
        return;
    }
    for e in (options[i] - used).iter() {
        current.push(e);
        let mut next = used;
        next.insert(e);
        row_matchings(options, next, current, out, cap);
        current.pop();
        if out.len() >= cap {
            return;
        }
    }
}

/// Uniquely completable, and every single-entry removal admits at least two
/// completions.
pub fn is_critical_set(square: &PartialLatinSquare) -> bool {
    let Ok(completion) = complete_unique(square) else {
        return false;
    };
    let mut engine = Engine::new(square);
    square.iter().all(|t| {
        engine.clear(t.row, t.col);
        let removable = !engine.has_completion_avoiding(t.row, t.col, t.sym);
        engine.set(t.row, t.col, t.sym);
        debug_assert!(completion.contains(t));
        !removable
    })
}

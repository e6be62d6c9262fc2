//! Latin trades, intercalates, and intercalate witnesses for entries of a
//! critical set.

use crate::completion::is_critical_set;
use crate::error::{Error, Result};
use crate::greedy::gcs;
use crate::square::{PartialLatinSquare, Triple};

/// Two partial squares with the same shape, disjoint symbols in every
/// cell, and the same symbols in each row and in each column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TradePair {
    t: PartialLatinSquare,
    t_mate: PartialLatinSquare,
}

impl TradePair {
    pub fn new(t: PartialLatinSquare, t_mate: PartialLatinSquare) -> Result<Self> {
        if !is_trade_pair(&t, &t_mate) {
            return Err(Error::Range("not a latin trade pair".into()));
        }
        Ok(TradePair { t, t_mate })
    }

    pub fn trade(&self) -> &PartialLatinSquare {
        &self.t
    }

    pub fn mate(&self) -> &PartialLatinSquare {
        &self.t_mate
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

pub fn is_trade_pair(t: &PartialLatinSquare, mate: &PartialLatinSquare) -> bool {
    let n = t.order();
    n == mate.order()
        && !t.is_empty()
        && t.shape() == mate.shape()
        && t.iter().all(|e| mate.get(e.row, e.col) != Some(e.sym))
        && (0..n).all(|i| t.row_symbols(i) == mate.row_symbols(i))
        && (0..n).all(|j| t.col_symbols(j) == mate.col_symbols(j))
}

/// `T = L ∖ L'` and `T' = L' ∖ L`.
pub fn trade_from_squares(l: &PartialLatinSquare, l2: &PartialLatinSquare) -> Result<TradePair> {
    if !l.is_full() || !l2.is_full() {
        return Err(Error::NotFull);
    }
    if l.order() != l2.order() {
        return Err(Error::Range(format!(
            "orders {} and {} differ",
            l.order(),
            l2.order()
        )));
    }
    if l == l2 {
        return Err(Error::IdenticalSquares);
    }
    TradePair::new(l.difference(l2), l2.difference(l))
}

/// `{(i,j;k), (i,j';k'), (i',j;k'), (i',j';k)}`, stored in `≪` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Intercalate {
    cells: [Triple; 4],
}

impl Intercalate {
    /// The intercalate of `l` on rows `r, r2` and columns `c, c2`, if those
    /// four cells form one.
    pub fn in_square(l: &PartialLatinSquare, (r, r2): (usize, usize), (c, c2): (usize, usize)) -> Option<Self> {
        if r == r2 || c == c2 {
            return None;
        }
        let k = l.get(r, c)?;
        let k2 = l.get(r, c2)?;
        if l.get(r2, c)? != k2 || l.get(r2, c2)? != k {
            return None;
        }
        let mut cells = [
            Triple::new(r, c, k),
            Triple::new(r, c2, k2),
            Triple::new(r2, c, k2),
            Triple::new(r2, c2, k),
        ];
        cells.sort();
        Some(Intercalate { cells })
    }

    pub fn cells(&self) -> &[Triple; 4] {
        &self.cells
    }

    pub fn least(&self) -> Triple {
        self.cells[0]
    }

    pub fn greatest(&self) -> Triple {
        self.cells[3]
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.cells.contains(t)
    }

    pub fn meet_count(&self, c: &PartialLatinSquare) -> usize {
        self.cells.iter().filter(|t| c.contains(t)).count()
    }

    /// The intercalate with its two symbols exchanged.
    pub fn mate(&self) -> [Triple; 4] {
        let [a, b, c, d] = self.cells;
        [
            Triple::new(a.row, a.col, b.sym),
            Triple::new(b.row, b.col, a.sym),
            Triple::new(c.row, c.col, d.sym),
            Triple::new(d.row, d.col, c.sym),
        ]
    }
}

/// All intercalates of a full square, ordered by least element.
pub fn enumerate_intercalates(l: &PartialLatinSquare) -> Result<Vec<Intercalate>> {
    if !l.is_full() {
        return Err(Error::NotFull);
    }
    let n = l.order();
    let mut out = Vec::new();
    for r in 0..n {
        for r2 in r + 1..n {
            for c in 0..n {
                for c2 in c + 1..n {
                    out.extend(Intercalate::in_square(l, (r, r2), (c, c2)));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The first intercalate `I ⊆ L` (in `≪` order of its cells) with
/// `I ∩ C = {x}`, optionally requiring `x` to be the least element of `I`.
pub fn intercalate_witness(
    l: &PartialLatinSquare,
    c: &PartialLatinSquare,
    x: Triple,
    require_least: bool,
) -> Option<Intercalate> {
    if !c.contains(&x) || !l.contains(&x) {
        return None;
    }
    let n = l.order();
    let mut best: Option<Intercalate> = None;
    for r2 in 0..n {
        if r2 == x.row || (require_least && r2 < x.row) {
            continue;
        }
        for c2 in 0..n {
            if c2 == x.col || (require_least && c2 < x.col) {
                continue;
            }
            let Some(i) = Intercalate::in_square(l, (x.row, r2), (x.col, c2)) else {
                continue;
            };
            if i.meet_count(c) == 1 && best.is_none_or(|b| i < b) {
                best = Some(i);
            }
        }
    }
    best
}

fn check_critical(c: &PartialLatinSquare, l: &PartialLatinSquare) -> Result<()> {
    if !l.is_full() {
        return Err(Error::NotFull);
    }
    if !c.is_subset_of(l) || !is_critical_set(c) {
        return Err(Error::NotCriticalSet);
    }
    Ok(())
}

/// Every entry of the critical set `c` meets some intercalate of `l` in
/// exactly that entry.
pub fn is_2_critical(c: &PartialLatinSquare, l: &PartialLatinSquare) -> Result<bool> {
    check_critical(c, l)?;
    Ok(c.iter().all(|&x| intercalate_witness(l, c, x, false).is_some()))
}

/// Result of checking a critical set against the least-element
/// characterisation of greedy critical sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcsCharacterization {
    /// Entries with no intercalate witness in which they are least.
    pub unwitnessed: Vec<Triple>,
    /// Whether `C = gcs(L)` when recomputed directly.
    pub equals_gcs: bool,
}

impl GcsCharacterization {
    /// Every entry has a least-element intercalate witness.
    pub fn holds(&self) -> bool {
        self.unwitnessed.is_empty()
    }

    /// The witness verdict and the direct recomputation agree. A mismatch
    /// can only arise when some entry needs a trade larger than an
    /// intercalate.
    pub fn agrees(&self) -> bool {
        self.holds() == self.equals_gcs
    }
}

pub fn verify_gcs_characterization(c: &PartialLatinSquare, l: &PartialLatinSquare) -> Result<GcsCharacterization> {
    check_critical(c, l)?;
    let unwitnessed = c
        .iter()
        .copied()
        .filter(|&x| intercalate_witness(l, c, x, true).is_none())
        .collect();
    Ok(GcsCharacterization {
        unwitnessed,
        equals_gcs: gcs(l)? == *c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isotopism::Isotopism;
    use crate::two_group::{build_l, build_p};

    fn sq(n: usize, t: &[(usize, usize, usize)]) -> PartialLatinSquare {
        PartialLatinSquare::from_triples(n, t.iter().map(|&(r, c, e)| Triple::new(r, c, e))).unwrap()
    }

    #[test]
    fn canonical_intercalate_pair() {
        let t = sq(2, &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]);
        let m = sq(2, &[(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]);
        assert!(is_trade_pair(&t, &m));
        assert!(!is_trade_pair(&t, &t));
        assert!(!is_trade_pair(&PartialLatinSquare::empty(2), &PartialLatinSquare::empty(2)));
    }

    #[test]
    fn trades_from_row_swaps() {
        let l2 = build_l(2).unwrap();
        let swapped = l2.apply(&Isotopism::row_swap(4, 0, 1).unwrap()).unwrap();
        assert_eq!(trade_from_squares(&l2, &swapped).unwrap().len(), 8);
        let l3 = build_l(3).unwrap();
        let swapped = l3.apply(&Isotopism::row_swap(8, 4, 5).unwrap()).unwrap();
        let trade = trade_from_squares(&l3, &swapped).unwrap();
        assert_eq!(trade.len(), 16);
        assert!(trade.trade().iter().all(|t| t.row == 4 || t.row == 5));
        assert!(matches!(trade_from_squares(&l2, &l2), Err(Error::IdenticalSquares)));
    }

    #[test]
    fn intercalate_counts() {
        assert_eq!(enumerate_intercalates(&build_l(1).unwrap()).unwrap().len(), 1);
        // Rows {i, i'} and columns {j, j'} carry an intercalate of L_s
        // exactly when i ^ i' == j ^ j'.
        for s in 2..=4 {
            let n = 1usize << s;
            let mut expected = 0;
            for i in 0..n {
                for i2 in i + 1..n {
                    for j in 0..n {
                        for j2 in j + 1..n {
                            expected += usize::from(i ^ i2 == j ^ j2);
                        }
                    }
                }
            }
            assert_eq!(enumerate_intercalates(&build_l(s).unwrap()).unwrap().len(), expected);
        }
        assert_eq!(enumerate_intercalates(&build_l(2).unwrap()).unwrap().len(), 12);
        let cyclic = PartialLatinSquare::from_triples(
            3,
            (0..3).flat_map(|r| (0..3).map(move |c| Triple::new(r, c, (r + c) % 3))),
        )
        .unwrap();
        assert!(enumerate_intercalates(&cyclic).unwrap().is_empty());
    }

    #[test]
    fn witnesses() {
        let l2 = build_l(2).unwrap();
        let p2 = build_p(2).unwrap();
        let w = intercalate_witness(&l2, &p2, Triple::new(0, 0, 0), true).unwrap();
        assert_eq!(w.least(), Triple::new(0, 0, 0));
        assert_eq!(w.meet_count(&p2), 1);
        assert!(intercalate_witness(&l2, &l2, Triple::new(1, 1, 0), false).is_none());
        let l1 = build_l(1).unwrap();
        let p1 = build_p(1).unwrap();
        let w = intercalate_witness(&l1, &p1, Triple::new(0, 0, 0), true).unwrap();
        assert_eq!(w.cells().to_vec(), l1.entries().to_vec());
    }

    #[test]
    fn p_is_2_critical_and_greedy() {
        for s in 1..=3 {
            let (l, p) = (build_l(s).unwrap(), build_p(s).unwrap());
            assert!(is_2_critical(&p, &l).unwrap());
            let report = verify_gcs_characterization(&p, &l).unwrap();
            assert!(report.holds() && report.equals_gcs);
        }
        assert!(matches!(
            is_2_critical(&build_l(2).unwrap(), &build_l(2).unwrap()),
            Err(Error::NotCriticalSet)
        ));
    }
}

//! Squares built from the elementary abelian 2-group: the Cayley tables
//! `L_s`, their greedy critical sets `P_s`, and the critical sets that
//! arise when rows `4k+1` and `4k+2` are swapped inside aligned blocks.

use crate::error::{ClashKind, Error, Result};
use crate::isotopism::Isotopism;
use crate::square::{compose_blocks, PartialLatinSquare, Triple, MAX_ORDER};

fn order_of(s: usize) -> Result<usize> {
    if s == 0 || (1usize << s.min(usize::BITS as usize - 1)) > MAX_ORDER {
        return Err(Error::Range(format!("s = {s} outside 1..={}", MAX_ORDER.trailing_zeros())));
    }
    Ok(1 << s)
}

/// `L_1 × M`: the order-`2m` square `[M, M¹; M¹, M]`.
pub fn double_square(m: &PartialLatinSquare) -> Result<PartialLatinSquare> {
    if !m.is_full() {
        return Err(Error::NotFull);
    }
    compose_blocks([m.into(), m.shift_symbols(1), m.shift_symbols(1), m.into()])
}

/// `L_s`, built by repeated doubling from `L_1`. Entry `(i, j)` is `i ⊕ j`.
pub fn build_l(s: usize) -> Result<PartialLatinSquare> {
    order_of(s)?;
    let mut l = PartialLatinSquare::from_triples(1, [Triple::new(0, 0, 0)])?;
    for _ in 0..s {
        l = double_square(&l)?;
    }
    Ok(l)
}

/// `P_s = P_1 ⊗ P_{s−1}`, i.e. `[L_{s−1}, P¹_{s−1}; P¹_{s−1}, P_{s−1}]`
/// with `P_1 = {(0,0;0)}`.
pub fn build_p(s: usize) -> Result<PartialLatinSquare> {
    order_of(s)?;
    let mut l = PartialLatinSquare::from_triples(1, [Triple::new(0, 0, 0)])?;
    let mut p = PartialLatinSquare::from_triples(2, [Triple::new(0, 0, 0)])?;
    for _ in 1..s {
        l = double_square(&l)?;
        p = doubling_seed(&l, &p)?;
    }
    Ok(p)
}

/// `[M, C¹; C¹, C]` for a full square `M` and `C ⊆ M`.
pub fn doubling_seed(m: &PartialLatinSquare, c: &PartialLatinSquare) -> Result<PartialLatinSquare> {
    if !m.is_full() {
        return Err(Error::NotFull);
    }
    if let Some(t) = c.iter().find(|t| !m.contains(t)) {
        let (r, col) = t.cell();
        return Err(Error::Conflict {
            kind: ClashKind::Cell,
            first: Triple::new(r, col, m.get(r, col).unwrap_or(t.sym)),
            second: *t,
        });
    }
    compose_blocks([m.into(), c.shift_symbols(1), c.shift_symbols(1), c.into()])
}

/// `Ĥ_2`: `L_2` with rows 1 and 2 exchanged.
pub fn build_h2_hat() -> PartialLatinSquare {
    build_l(2)
        .and_then(|l| l.apply(&Isotopism::row_swap(4, 1, 2)?))
        .expect("order 4 is valid")
}

/// `H_2`: the greedy critical set of `Ĥ_2`, seven entries isotopic to `P_2`.
pub fn build_h2() -> PartialLatinSquare {
    let cells = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    let hat = build_h2_hat();
    let triples = cells
        .iter()
        .map(|&(r, c)| Triple::new(r, c, hat.get(r, c).expect("full")));
    PartialLatinSquare::from_triples(4, triples).expect("subset of a latin square")
}

/// Swap sets accepted by [`build_multiswap_g`] at level `s`: every
/// non-empty subset of the `2^{s−2}` row bands, ascending.
pub fn multiswap_sets(s: usize) -> Result<Vec<Vec<usize>>> {
    let n = order_of(s)?;
    if s < 2 {
        return Err(Error::Range("swap blocks need s ≥ 2".into()));
    }
    let bands = n / 4;
    if bands >= usize::BITS as usize {
        return Err(Error::Range(format!("{bands} bands is too many to enumerate")));
    }
    Ok((1usize..1 << bands)
        .map(|mask| (0..bands).filter(|b| mask >> b & 1 == 1).collect())
        .collect())
}

/// `G_s` for the isotopism exchanging rows `4k+1` and `4k+2` for each `k`
/// in `ks`.
///
/// Each aligned 4×4 block is copied from `P_s` when its row band is not
/// swapped. In a swapped band, a full block of `P_s` becomes `Ĥ_2^l` and a
/// partial one `H_2^l`, where the block of `L_s` is `L_2^l`.
pub fn build_multiswap_g(s: usize, ks: &[usize]) -> Result<PartialLatinSquare> {
    let n = order_of(s)?;
    if s < 2 {
        return Err(Error::Range("swap blocks need s ≥ 2".into()));
    }
    Isotopism::multi_swap(n, ks)?;
    let p = build_p(s)?;
    let (h2, h2_hat) = (build_h2(), build_h2_hat());
    let l2 = build_l(2)?;

    let mut triples = Vec::new();
    for i in (0..n).step_by(4) {
        for j in (0..n).step_by(4) {
            let block = p.subsquare(i, j, 4)?;
            if !ks.contains(&(i / 4)) {
                triples.extend(block.iter().copied());
                continue;
            }
            let l = (i ^ j) / 4;
            let source = if block.len() == 16 {
                debug_assert!(p.rebase(i, j, 4).is_ok_and(|(b, _)| b.is_similar(&l2).is_some()));
                &h2_hat
            } else {
                &h2
            };
            triples.extend(
                source
                    .shift_symbols(l)
                    .triples()
                    .map(|t| Triple::new(t.row + i, t.col + j, t.sym)),
            );
        }
    }
    PartialLatinSquare::from_triples(n, triples)
}

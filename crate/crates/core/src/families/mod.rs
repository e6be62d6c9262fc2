//! The recursive families `E`, `A` and `G`, the order-8 squares `U` and
//! `V`, and the base tables they are built from.
//!
//! Base tables come from [`Fixtures`]. Everything larger is assembled by
//! evaluating an [`Expansion`] tree, so a printed trace and the square it
//! describes can never disagree.

mod expansion;
mod fixtures;

use std::sync::OnceLock;

pub use expansion::{admissible_pairs, is_admissible, Expansion, Term, GAMMA, LAMBDA};
pub use fixtures::{Fixtures, EMBEDDED};

use crate::completion::{alternatives, AlternativesGrid, Region};
use crate::error::{Error, Result};
use crate::square::{compose_blocks, PartialLatinSquare, Shifted};
use crate::symbols::SymbolSet;
use crate::two_group::{build_l, build_p};

/// The kinds of base table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    GcsL2,
    GcsL3,
    E2,
    A2,
    U,
    V,
    H2,
}

/// A base table with its key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTable {
    pub kind: FamilyKind,
    pub key: Option<(usize, usize)>,
    pub square: PartialLatinSquare,
}

fn pair_name(k: usize, k2: usize) -> String {
    format!("{k}{k2}")
}

/// Builders bound to one set of base tables.
#[derive(Debug, Clone)]
pub struct Families {
    fixtures: Fixtures,
}

/// The builders over the embedded tables.
pub fn families() -> &'static Families {
    static EMBEDDED_FAMILIES: OnceLock<Families> = OnceLock::new();
    EMBEDDED_FAMILIES.get_or_init(|| Families::new(Fixtures::embedded()))
}

impl Families {
    pub fn new(fixtures: Fixtures) -> Self {
        Families { fixtures }
    }

    pub fn fixtures(&self) -> &Fixtures {
        &self.fixtures
    }

    fn table(&self, name: &str) -> Result<PartialLatinSquare> {
        Ok(self.fixtures.get(name)?.primary().clone())
    }

    fn keyed(&self, set: &[(usize, usize)], what: &str, k: usize, k2: usize) -> Result<()> {
        if set.contains(&(k, k2)) {
            Ok(())
        } else {
            Err(Error::Key(format!("{what} has no table for ({k},{k2})")))
        }
    }

    /// `gcs(α_{k,k'} L_2)` for `(k, k') ∈ Λ`.
    pub fn base_gcs_l2(&self, k: usize, k2: usize) -> Result<PartialLatinSquare> {
        self.keyed(&LAMBDA, "gcs(αL_2)", k, k2)?;
        self.table(&format!("gcs_a{}_l2", pair_name(k, k2)))
    }

    /// `gcs(α_{k,k'} L_3)` for `(k, k') ∈ Γ ∪ Λ`.
    pub fn base_gcs_l3(&self, k: usize, k2: usize) -> Result<PartialLatinSquare> {
        if !GAMMA.contains(&(k, k2)) {
            self.keyed(&LAMBDA, "gcs(αL_3)", k, k2)?;
        }
        self.table(&format!("gcs_a{}_l3", pair_name(k, k2)))
    }

    fn top_left_quarter(&self, square: &PartialLatinSquare) -> Result<PartialLatinSquare> {
        let (block, _) = square.rebase(0, 0, square.order() / 2)?;
        Ok(block)
    }

    /// `E(k,k')_2`: the top-left quarter of `gcs(α_{k,k'} L_3)`, `(k, k') ∈ Γ`.
    pub fn base_e2(&self, k: usize, k2: usize) -> Result<PartialLatinSquare> {
        self.keyed(&GAMMA, "E_2", k, k2)?;
        self.top_left_quarter(&self.base_gcs_l3(k, k2)?)
    }

    /// `A(k,k')_2`: the top-left quarter of `gcs(α_{k,k'} L_3)`, `(k, k') ∈ Λ`.
    pub fn base_a2(&self, k: usize, k2: usize) -> Result<PartialLatinSquare> {
        self.keyed(&LAMBDA, "A_2", k, k2)?;
        self.top_left_quarter(&self.base_gcs_l3(k, k2)?)
    }

    pub fn h2(&self) -> Result<PartialLatinSquare> {
        self.table("h2")
    }

    /// Every base table with its key.
    pub fn tables(&self) -> Result<Vec<FamilyTable>> {
        let mut out = Vec::new();
        let mut push = |kind, key: Option<(usize, usize)>, square| {
            out.push(FamilyTable { kind, key, square });
        };
        for &(k, k2) in &LAMBDA {
            push(FamilyKind::GcsL2, Some((k, k2)), self.base_gcs_l2(k, k2)?);
        }
        for &(k, k2) in LAMBDA.iter().chain(&GAMMA) {
            push(FamilyKind::GcsL3, Some((k, k2)), self.base_gcs_l3(k, k2)?);
        }
        for &(k, k2) in &LAMBDA {
            push(FamilyKind::A2, Some((k, k2)), self.base_a2(k, k2)?);
        }
        for &(k, k2) in &GAMMA {
            push(FamilyKind::E2, Some((k, k2)), self.base_e2(k, k2)?);
            push(FamilyKind::U, Some((k, k2)), self.build_u(k, k2)?);
            push(FamilyKind::V, Some((k, k2)), self.build_v(k, k2)?);
        }
        push(FamilyKind::H2, None, self.h2()?);
        Ok(out)
    }

    /// Builds the square an expansion describes, ignoring the root's shift.
    pub fn evaluate(&self, node: &Expansion) -> Result<PartialLatinSquare> {
        if !node.is_leaf() {
            let squares = node
                .children
                .iter()
                .map(|c| self.evaluate(c))
                .collect::<Result<Vec<_>>>()?;
            let shifted: Vec<Shifted<'_>> = squares
                .iter()
                .zip(&node.children)
                .map(|(sq, c)| sq.shift_symbols(c.shift))
                .collect();
            return compose_blocks([shifted[0], shifted[1], shifted[2], shifted[3]]);
        }
        match node.term {
            Term::G { k, k2, s: 2 } => self.base_gcs_l2(k, k2),
            Term::G { k, k2, s: 3 } => self.base_gcs_l3(k, k2),
            Term::E { k, k2, m: 2 } => self.base_e2(k, k2),
            Term::A { k, k2, m: 2 } => self.base_a2(k, k2),
            Term::P { s } => build_p(s),
            Term::L { s } => build_l(s),
            term => Err(Error::Key(format!("{term} is not a base table"))),
        }
    }

    pub fn expansion_trace(&self, k: usize, k2: usize, s: usize) -> Result<Expansion> {
        expansion::expand_g(k, k2, s, 0)
    }

    /// `G(k,k',s)`, the greedy critical set of `α_{k,k'} L_s`.
    pub fn build_g(&self, k: usize, k2: usize, s: usize) -> Result<PartialLatinSquare> {
        self.evaluate(&expansion::expand_g(k, k2, s, 0)?)
    }

    /// `E(k,k')_m` with `2^m ≤ k < k' < 2^{m+1}`.
    pub fn build_e(&self, k: usize, k2: usize, m: usize) -> Result<PartialLatinSquare> {
        self.evaluate(&expansion::expand_e(k, k2, m, 0)?)
    }

    /// `A(k,k')_m` with `k < k' < 2^m`.
    pub fn build_a(&self, k: usize, k2: usize, m: usize) -> Result<PartialLatinSquare> {
        self.evaluate(&expansion::expand_a(k, k2, m, 0)?)
    }

    /// `U(k,k') = [E, P¹; E¹, P]` over `E(k,k')_2` and `P_2`.
    pub fn build_u(&self, k: usize, k2: usize) -> Result<PartialLatinSquare> {
        let (e, p) = (self.base_e2(k, k2)?, build_p(2)?);
        compose_blocks([(&e).into(), p.shift_symbols(1), e.shift_symbols(1), (&p).into()])
    }

    /// `V(k,k') = [E, P¹; P¹, E]` over `E(k,k')_2` and `P_2`.
    pub fn build_v(&self, k: usize, k2: usize) -> Result<PartialLatinSquare> {
        let (e, p) = (self.base_e2(k, k2)?, build_p(2)?);
        compose_blocks([(&e).into(), p.shift_symbols(1), p.shift_symbols(1), (&e).into()])
    }

    /// No cell of the top-left quarter of `U(k,k')` admits a symbol from
    /// `4..8`.
    pub fn check_blocking_u(&self, k: usize, k2: usize) -> Result<bool> {
        let grid = alternatives(&self.build_u(k, k2)?, &Region::new(0..4, 0..4))?;
        Ok(avoids(&grid, SymbolSet::full(8) - SymbolSet::full(4)))
    }

    /// No cell of the top-right quarter of `V(k,k')` admits a symbol from
    /// `0..4`.
    pub fn check_blocking_v(&self, k: usize, k2: usize) -> Result<bool> {
        let grid = alternatives(&self.build_v(k, k2)?, &Region::new(0..4, 4..8))?;
        Ok(avoids(&grid, SymbolSet::full(4)))
    }
}

fn avoids(grid: &AlternativesGrid, forbidden: SymbolSet) -> bool {
    grid.iter().all(|(_, set)| (set & forbidden).is_empty())
}

//! Partial latin squares over the elementary abelian 2-group, greedy
//! critical sets and the recursive families that describe them.

pub mod completion;
pub mod error;
pub mod families;
pub mod format;
pub mod greedy;
pub mod isotopism;
pub mod square;
pub mod scan;
pub mod symbols;
pub mod trades;
pub mod two_group;

pub use completion::{
    alternatives, complete_unique, completes_top_down, count_completions, is_critical_set,
    strong_complete, strong_complete_region, AlternativesGrid, CompletionTrace, Region, TopDown,
};
pub use greedy::{gcs, ggcs, CellOrder};
pub use error::{ClashKind, Error, Result};
pub use isotopism::Isotopism;
pub use square::{compose_blocks, PartialLatinSquare, Shifted, Similarity, Triple, MAX_ORDER};
pub use symbols::SymbolSet;

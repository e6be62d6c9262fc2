use std::fmt;

use crate::completion::CompletionTrace;
use crate::square::{PartialLatinSquare, Triple};

/// Which latin constraint two triples violate together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClashKind {
    /// Same cell, different symbols.
    Cell,
    /// Same symbol twice in one row.
    Row,
    /// Same symbol twice in one column.
    Column,
}

impl fmt::Display for ClashKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClashKind::Cell => f.write_str("cell clash"),
            ClashKind::Row => f.write_str("row clash"),
            ClashKind::Column => f.write_str("column clash"),
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("{kind} between {first} and {second}")]
    Conflict {
        kind: ClashKind,
        first: Triple,
        second: Triple,
    },

    #[error("square is empty")]
    EmptySquare,

    #[error("out of range: {0}")]
    Range(String),

    #[error("partial square has no completion")]
    NoCompletion,

    /// Carries two distinct completions so callers can extract the trade
    /// between them.
    #[error("partial square has more than one completion")]
    NotUnique {
        first: Box<PartialLatinSquare>,
        second: Box<PartialLatinSquare>,
    },

    #[error("partial square is not uniquely completable")]
    NotUniquelyCompletable,

    #[error("not a critical set")]
    NotCriticalSet,

    #[error("square is not full")]
    NotFull,

    #[error("squares are identical")]
    IdenticalSquares,

    #[error("no table for key: {0}")]
    Key(String),

    /// Singleton propagation ran out of forced cells; the trace records
    /// how far it got.
    #[error("propagation stuck with {} cells filled", trace.result.len())]
    Stuck { trace: Box<CompletionTrace> },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

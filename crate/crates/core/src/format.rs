//! Text grid and JSON encodings of partial latin squares.
//!
//! Grid format: one line per row, whitespace-separated tokens, `-` for an
//! empty cell, decimal symbols otherwise. A token written `(k)` marks the
//! entry as a member of a distinguished subset, which is how a critical set
//! is shown inside its completion. Blank lines and lines starting with `#`
//! are ignored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::square::{PartialLatinSquare, Triple};

/// A parsed grid: every filled cell, plus the parenthesised subset when the
/// grid uses markers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDocument {
    pub square: PartialLatinSquare,
    pub marked: Option<PartialLatinSquare>,
}

impl GridDocument {
    /// The marked subset if present, otherwise the whole square.
    pub fn primary(&self) -> &PartialLatinSquare {
        self.marked.as_ref().unwrap_or(&self.square)
    }
}

pub fn parse_grid(text: &str) -> Result<GridDocument> {
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        rows.push((i + 1, line.split_whitespace().collect()));
    }
    let n = rows.len();
    if n == 0 {
        return Err(Error::Parse {
            line: 0,
            message: "no rows".into(),
        });
    }
    let mut all = Vec::new();
    let mut marked = Vec::new();
    let mut any_marker = false;
    for (r, (line, tokens)) in rows.iter().enumerate() {
        if tokens.len() != n {
            return Err(Error::Parse {
                line: *line,
                message: format!("expected {n} tokens, found {}", tokens.len()),
            });
        }
        for (c, tok) in tokens.iter().enumerate() {
            if *tok == "-" {
                continue;
            }
            let (inner, is_marked) = match tok.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
                Some(inner) => (inner, true),
                None => (*tok, false),
            };
            let sym: usize = inner.parse().map_err(|_| Error::Parse {
                line: *line,
                message: format!("bad token {tok:?}"),
            })?;
            let t = Triple::new(r, c, sym);
            all.push(t);
            if is_marked {
                any_marker = true;
                marked.push(t);
            }
        }
    }
    let square = PartialLatinSquare::from_triples(n, all)?;
    let marked = if any_marker {
        Some(PartialLatinSquare::from_triples(n, marked)?)
    } else {
        None
    };
    Ok(GridDocument { square, marked })
}

fn digits(n: usize) -> usize {
    n.saturating_sub(1).to_string().len()
}

fn render_with(square: &PartialLatinSquare, token: impl Fn(usize, usize) -> String, width: usize) -> String {
    let n = square.order();
    let mut out = String::new();
    for r in 0..n {
        let line: Vec<String> = (0..n).map(|c| format!("{:>width$}", token(r, c))).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Plain grid: symbols and `-`.
pub fn render_grid(square: &PartialLatinSquare) -> String {
    let token = |r, c| square.get(r, c).map_or_else(|| "-".to_string(), |e| e.to_string());
    render_with(square, token, digits(square.order()))
}

/// Grid of `square` with the entries of `marked` in parentheses.
pub fn render_marked(square: &PartialLatinSquare, marked: &PartialLatinSquare) -> String {
    let token = |r, c| match (square.get(r, c), marked.get(r, c)) {
        (_, Some(e)) => format!("({e})"),
        (Some(e), None) => e.to_string(),
        (None, None) => "-".to_string(),
    };
    render_with(square, token, digits(square.order()) + 2)
}

#[derive(Serialize, Deserialize)]
struct SquareJson {
    order: usize,
    entries: Vec<[usize; 3]>,
}

pub fn to_json(square: &PartialLatinSquare) -> String {
    let doc = SquareJson {
        order: square.order(),
        entries: square.iter().map(|t| [t.row, t.col, t.sym]).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serialises")
}

pub fn from_json(text: &str) -> Result<PartialLatinSquare> {
    let doc: SquareJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    PartialLatinSquare::from_triples(
        doc.order,
        doc.entries.iter().map(|&[r, c, e]| Triple::new(r, c, e)),
    )
}

/// Reads either encoding, deciding by the first non-blank character.
pub fn parse_any(text: &str) -> Result<GridDocument> {
    if text.trim_start().starts_with('{') {
        Ok(GridDocument {
            square: from_json(text)?,
            marked: None,
        })
    } else {
        parse_grid(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_marked_grid() {
        let doc = parse_grid("(0) 1\n 1 (0)\n").unwrap();
        assert!(doc.square.is_full());
        let marked = doc.marked.unwrap();
        assert_eq!(marked.entries(), &[Triple::new(0, 0, 0), Triple::new(1, 1, 0)]);
    }

    #[test]
    fn parse_plain_grid() {
        let doc = parse_grid("# comment\n0 -\n- -\n").unwrap();
        assert_eq!(doc.square.len(), 1);
        assert!(doc.marked.is_none());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_grid("0 1\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_grid("0 x\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_grid("0 0\n- -\n"), Err(Error::Conflict { .. })));
        assert!(parse_grid("\n\n").is_err());
    }

    #[test]
    fn render_marked_round_trip() {
        let full = parse_grid("0 1\n1 0\n").unwrap().square;
        let c = PartialLatinSquare::from_triples(2, [Triple::new(0, 0, 0)]).unwrap();
        let text = render_marked(&full, &c);
        assert_eq!(text, "(0)   1\n  1   0\n");
        let back = parse_grid(&text).unwrap();
        assert_eq!(back.square, full);
        assert_eq!(back.marked.unwrap(), c);
    }

    #[test]
    fn json_round_trip() {
        let p = PartialLatinSquare::from_triples(3, [Triple::new(2, 1, 0)]).unwrap();
        let text = to_json(&p);
        assert_eq!(text, r#"{"order":3,"entries":[[2,1,0]]}"#);
        assert_eq!(from_json(&text).unwrap(), p);
        assert_eq!(parse_any(&text).unwrap().square, p);
        assert!(from_json(r#"{"order":2,"entries":[[0,0,0],[0,1,0]]}"#).is_err());
    }
}

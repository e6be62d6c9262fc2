//! Recursion trees for the `G`, `E` and `A` families.
//!
//! A composite node is the 2×2 block square of its four children, each
//! raised by its own symbol shift. Leaves are base tables or `P`/`L`.

use std::fmt;

use crate::error::{Error, Result};

pub const GAMMA: [(usize, usize); 5] = [(4, 5), (4, 6), (5, 6), (5, 7), (6, 7)];
pub const LAMBDA: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Term {
    /// `G(k,k',s)`, order `2^s`.
    G { k: usize, k2: usize, s: usize },
    /// `E(k,k')_m`, order `2^m`, indices in `2^m..2^{m+1}`.
    E { k: usize, k2: usize, m: usize },
    /// `A(k,k')_m`, order `2^m`, indices below `2^m`.
    A { k: usize, k2: usize, m: usize },
    P { s: usize },
    L { s: usize },
}

impl Term {
    pub fn order(&self) -> usize {
        match *self {
            Term::G { s, .. } | Term::P { s } | Term::L { s } => 1 << s,
            Term::E { m, .. } | Term::A { m, .. } => 1 << m,
        }
    }

    fn write_with_shift(&self, f: &mut fmt::Formatter<'_>, shift: Option<usize>) -> fmt::Result {
        let sup = shift.map(|r| format!("^{r}")).unwrap_or_default();
        match *self {
            Term::G { k, k2, s } => write!(f, "G({k},{k2},{s}){sup}"),
            Term::E { k, k2, m } => write!(f, "E({k},{k2}){sup}_{m}"),
            Term::A { k, k2, m } => write!(f, "A({k},{k2}){sup}_{m}"),
            Term::P { s } => write!(f, "P{sup}_{s}"),
            Term::L { s } => write!(f, "L{sup}_{s}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with_shift(f, None)
    }
}

/// Whether `(k, k')` is an admissible swap at level `s`: `k < k'`, both
/// inside one aligned block of four rows, at most two apart.
pub fn is_admissible(k: usize, k2: usize, s: usize) -> bool {
    (2..=6).contains(&s) && k < k2 && k2 < 1 << s && k2 - k < 3 && k / 4 == k2 / 4
}

/// Every admissible pair at level `s`, ascending.
pub fn admissible_pairs(s: usize) -> Vec<(usize, usize)> {
    if !(2..=6).contains(&s) {
        return Vec::new();
    }
    let n = 1usize << s;
    (0..n)
        .flat_map(|k| (k + 1..n).map(move |k2| (k, k2)))
        .filter(|&(k, k2)| is_admissible(k, k2, s))
        .collect()
}

/// One node of an expansion: a term, the shift applied to it by its
/// parent, and either no children (a leaf) or four block children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub term: Term,
    pub shift: usize,
    pub children: Vec<Expansion>,
}

impl Expansion {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// The term with this node's shift, e.g. `P^1_5`.
    pub fn label(&self) -> String {
        struct Label<'a>(&'a Expansion);
        impl fmt::Display for Label<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.term.write_with_shift(f, Some(self.0.shift))
            }
        }
        Label(self).to_string()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Expansion::node_count).sum::<usize>()
    }

    /// The tree with at most `depth` levels below the root.
    pub fn truncated(&self, depth: usize) -> Expansion {
        Expansion {
            term: self.term,
            shift: self.shift,
            children: if depth == 0 {
                Vec::new()
            } else {
                self.children.iter().map(|c| c.truncated(depth - 1)).collect()
            },
        }
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, indent: usize) -> fmt::Result {
        write!(f, "{:indent$}{}", "", self.label())?;
        if self.is_leaf() && matches!(self.term, Term::G { .. } | Term::E { .. } | Term::A { .. }) {
            f.write_str(" [table]")?;
        }
        writeln!(f)?;
        self.children.iter().try_for_each(|c| c.write_tree(f, indent + 2))
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_tree(f, 0)
    }
}

fn leaf(term: Term, shift: usize) -> Expansion {
    Expansion {
        term,
        shift,
        children: Vec::new(),
    }
}

fn blocks(term: Term, shift: usize, children: [Expansion; 4]) -> Expansion {
    Expansion {
        term,
        shift,
        children: children.into(),
    }
}

fn key_error(term: Term, why: &str) -> Error {
    Error::Key(format!("{term}: {why}"))
}

pub fn expand_g(k: usize, k2: usize, s: usize, shift: usize) -> Result<Expansion> {
    let term = Term::G { k, k2, s };
    if !is_admissible(k, k2, s) {
        return Err(key_error(
            term,
            "needs k < k' < 2^s in one aligned block of four with k' - k < 3",
        ));
    }
    if s <= 3 {
        return Ok(leaf(term, shift));
    }
    let half = 1 << (s - 1);
    let p = |r| leaf(Term::P { s: s - 1 }, r);
    if k2 < half {
        Ok(blocks(
            term,
            shift,
            [expand_a(k, k2, s - 1, 0)?, expand_g(k, k2, s - 1, 1)?, p(1), p(0)],
        ))
    } else {
        Ok(blocks(
            term,
            shift,
            [
                expand_e(k, k2, s - 1, 0)?,
                p(1),
                expand_g(k - half, k2 - half, s - 1, 1)?,
                expand_g(k - half, k2 - half, s - 1, 0)?,
            ],
        ))
    }
}

pub fn expand_e(k: usize, k2: usize, m: usize, shift: usize) -> Result<Expansion> {
    let term = Term::E { k, k2, m };
    if m < 2 {
        return Err(key_error(term, "needs m >= 2"));
    }
    if m == 2 {
        return if GAMMA.contains(&(k, k2)) {
            Ok(leaf(term, shift))
        } else {
            Err(key_error(term, "base pair outside Γ"))
        };
    }
    let d = 1 << (m - 1);
    let l = |r| leaf(Term::L { s: m - 1 }, r);
    let within = |lo: usize| (lo..lo + d).contains(&k) && (lo..lo + d).contains(&k2);
    if within(2 * d) {
        Ok(blocks(term, shift, [l(0), expand_e(k - d, k2 - d, m - 1, 1)?, l(1), l(0)]))
    } else if within(3 * d) {
        let (a, b) = (k - 2 * d, k2 - 2 * d);
        Ok(blocks(
            term,
            shift,
            [expand_e(a, b, m - 1, 0)?, l(1), expand_e(a, b, m - 1, 1)?, expand_e(a, b, m - 1, 0)?],
        ))
    } else {
        Err(key_error(term, "indices not within one quarter of 2^m..2^{m+1}"))
    }
}

pub fn expand_a(k: usize, k2: usize, m: usize, shift: usize) -> Result<Expansion> {
    let term = Term::A { k, k2, m };
    if m < 2 {
        return Err(key_error(term, "needs m >= 2"));
    }
    if m == 2 {
        return if LAMBDA.contains(&(k, k2)) {
            Ok(leaf(term, shift))
        } else {
            Err(key_error(term, "base pair outside Λ"))
        };
    }
    let h = 1 << (m - 1);
    let l = |r| leaf(Term::L { s: m - 1 }, r);
    if k < k2 && k2 < h {
        Ok(blocks(
            term,
            shift,
            [expand_a(k, k2, m - 1, 0)?, expand_a(k, k2, m - 1, 1)?, l(1), l(0)],
        ))
    } else if h <= k && k < k2 && k2 < 2 * h {
        let (a, b) = (k - h, k2 - h);
        Ok(blocks(
            term,
            shift,
            [l(0), l(1), expand_a(a, b, m - 1, 1)?, expand_a(a, b, m - 1, 0)?],
        ))
    } else {
        Err(key_error(term, "indices not within one half of 0..2^m"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_pairs_by_level() {
        assert_eq!(admissible_pairs(2), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(admissible_pairs(3).len(), 10);
        assert_eq!(admissible_pairs(4).len(), 20);
        assert!(!is_admissible(3, 5, 3));
        assert!(!is_admissible(0, 3, 2));
    }

    #[test]
    fn worked_example_shape() {
        let t = expand_g(60, 62, 6, 0).unwrap();
        let labels: Vec<String> = t.children.iter().map(Expansion::label).collect();
        assert_eq!(labels, vec!["E(60,62)^0_5", "P^1_5", "G(28,30,5)^1", "G(28,30,5)^0"]);
        let g5 = &t.children[2];
        assert_eq!(g5.children[2].term, Term::G { k: 12, k2: 14, s: 4 });
        let e = &t.children[0];
        assert_eq!(e.children[0].term, Term::E { k: 28, k2: 30, m: 4 });
        assert_eq!(e.children[0].children[0].term, Term::E { k: 12, k2: 14, m: 3 });
    }

    #[test]
    fn leaves_and_guards() {
        let t = expand_g(4, 5, 3, 0).unwrap();
        assert!(t.is_leaf());
        assert_eq!(t.to_string(), "G(4,5,3)^0 [table]\n");
        assert!(matches!(expand_g(3, 5, 3, 0), Err(Error::Key(_))));
        assert!(expand_a(4, 5, 2, 0).is_err());
        assert!(expand_e(0, 1, 2, 0).is_err());
        assert!(expand_e(7, 9, 3, 0).is_err());
    }
}

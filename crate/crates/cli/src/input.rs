//! Parsers for argument values clap does not handle itself.

use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Duration;

/// A built-in full square named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// `L<s>`
    L(usize),
    /// `aL<s>`: two rows exchanged.
    Swapped(usize),
    /// `mL<s>`: several disjoint adjacent pairs exchanged.
    MultiSwapped(usize),
}

impl Builtin {
    pub fn level(self) -> usize {
        match self {
            Builtin::L(s) | Builtin::Swapped(s) | Builtin::MultiSwapped(s) => s,
        }
    }
}

impl FromStr for Builtin {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let (ctor, rest): (fn(usize) -> Builtin, _) = if let Some(rest) = text.strip_prefix("aL") {
            (Builtin::Swapped, rest)
        } else if let Some(rest) = text.strip_prefix("mL") {
            (Builtin::MultiSwapped, rest)
        } else if let Some(rest) = text.strip_prefix('L') {
            (Builtin::L, rest)
        } else {
            return Err(format!("unknown builtin {text:?}; expected L<s>, aL<s> or mL<s>"));
        };
        rest.parse()
            .map(ctor)
            .map_err(|_| format!("bad level in builtin {text:?}"))
    }
}

/// `5`, `2..4` or `2..=4`; both bounds inclusive.
pub fn parse_levels(text: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("bad level range {text:?}");
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// A number with an optional `ms`, `s`, `m` or `h` suffix; seconds when
/// bare.
pub fn parse_budget(text: &str) -> Result<Duration, String> {
    let text = text.trim();
    let split = text.find(|c: char| !c.is_ascii_digit() && c != '.').unwrap_or(text.len());
    let (num, unit) = text.split_at(split);
    let value: f64 = num.parse().map_err(|_| format!("bad duration {text:?}"))?;
    let scale = match unit {
        "ms" => 1e-3,
        "" | "s" => 1.0,
        "m" => 60.0,
        "h" => 3600.0,
        _ => return Err(format!("bad duration unit {unit:?}")),
    };
    Duration::try_from_secs_f64(value * scale).map_err(|e| e.to_string())
}

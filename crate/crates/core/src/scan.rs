//! Batch verification of `gcs(α_{k,k'} L_s)` over many swap pairs.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::completion::{completes_top_down, is_critical_set, strong_complete};
use crate::error::Result;
use crate::families::{admissible_pairs, Families};
use crate::greedy::gcs;
use crate::isotopism::Isotopism;
use crate::trades::is_2_critical;
use crate::two_group::build_l;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    /// Pairs inside one aligned block of four rows; the result is also
    /// compared with the recursive construction.
    Theorem,
    /// Every pair at distance one or two.
    Conjecture,
}

/// Swap pairs examined at level `s`.
pub fn scan_pairs(s: usize, mode: ScanMode) -> Vec<(usize, usize)> {
    match mode {
        ScanMode::Theorem => admissible_pairs(s),
        ScanMode::Conjecture => {
            let n = 1usize << s;
            (0..n)
                .flat_map(|k| (k + 1..n.min(k + 3)).map(move |k2| (k, k2)))
                .collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub s: usize,
    pub k: usize,
    pub k2: usize,
    pub size: usize,
    pub critical: bool,
    pub two_critical: bool,
    pub strong: bool,
    pub top_down: bool,
    /// Equality with the recursive construction; theorem mode only.
    pub matches_construction: Option<bool>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl PairReport {
    pub fn passes(&self) -> bool {
        self.critical
            && self.two_critical
            && self.strong
            && self.top_down
            && self.matches_construction != Some(false)
    }
}

pub fn check_pair(families: &Families, s: usize, k: usize, k2: usize, mode: ScanMode) -> Result<PairReport> {
    let start = Instant::now();
    let n = 1 << s;
    let square = build_l(s)?.apply(&Isotopism::row_swap(n, k, k2)?)?;
    let c = gcs(&square)?;
    let critical = is_critical_set(&c);
    let two_critical = critical && is_2_critical(&c, &square)?;
    let top_down = critical && completes_top_down(&c)?.completes;
    let matches_construction = match mode {
        ScanMode::Theorem => Some(families.build_g(k, k2, s)? == c),
        ScanMode::Conjecture => None,
    };
    Ok(PairReport {
        s,
        k,
        k2,
        size: c.len(),
        critical,
        two_critical,
        strong: strong_complete(&c).is_ok(),
        top_down,
        matches_construction,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub mode: ScanMode,
    /// Sorted by `(s, k, k')`.
    pub pairs: Vec<PairReport>,
    /// Pairs not started because the budget ran out.
    pub skipped: Vec<(usize, usize, usize)>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn passes(&self) -> bool {
        self.skipped.is_empty() && self.pairs.iter().all(PairReport::passes)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairReport> {
        self.pairs.iter().filter(|p| !p.passes())
    }
}

/// Checks every pair for each level in `levels`, in parallel. Pairs that
/// have not started when `budget` expires are reported as skipped.
pub fn scan(
    families: &Families,
    levels: impl IntoIterator<Item = usize>,
    mode: ScanMode,
    budget: Option<Duration>,
) -> Result<ScanReport> {
    let start = Instant::now();
    let jobs: Vec<(usize, usize, usize)> = levels
        .into_iter()
        .flat_map(|s| scan_pairs(s, mode).into_iter().map(move |(k, k2)| (s, k, k2)))
        .collect();
    let outcomes: Vec<Result<Option<PairReport>>> = jobs
        .par_iter()
        .map(|&(s, k, k2)| {
            if budget.is_some_and(|b| start.elapsed() > b) {
                return Ok(None);
            }
            check_pair(families, s, k, k2, mode).map(Some)
        })
        .collect();
    let mut pairs = Vec::new();
    let mut skipped = Vec::new();
    for (job, outcome) in jobs.into_iter().zip(outcomes) {
        match outcome? {
            Some(report) => pairs.push(report),
            None => skipped.push(job),
        }
    }
    Ok(ScanReport {
        mode,
        pairs,
        skipped,
        elapsed: start.elapsed(),
    })
}

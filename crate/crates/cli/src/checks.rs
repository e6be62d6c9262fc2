//! The property checks behind `verify`.

use std::fmt;

use clap::ValueEnum;
use latinset::trades::{is_2_critical, verify_gcs_characterization};
use latinset::{complete_unique, completes_top_down, is_critical_set, strong_complete, PartialLatinSquare};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Exactly one completion (equal to the ambient square if given).
    Unique,
    /// Uniquely completable and no entry can be dropped.
    Critical,
    /// Every entry has an intercalate meeting the set only there.
    #[value(name = "2critical")]
    TwoCritical,
    /// Completes by forced cells alone.
    Strong,
    /// Completes row by row.
    #[value(name = "topdown")]
    TopDown,
    /// Every entry is least in such an intercalate, and the set is the
    /// greedy critical set of its completion.
    #[value(name = "gcschar")]
    GcsChar,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Unique => "unique",
            Check::Critical => "critical",
            Check::TwoCritical => "2critical",
            Check::Strong => "strong",
            Check::TopDown => "topdown",
            Check::GcsChar => "gcschar",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn new(check: &'static str, pass: bool, detail: impl Into<String>) -> Self {
        CheckReport {
            check,
            pass,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.check, self.detail)
    }
}

/// Runs one check on `c`. Checks that need a full square use `ambient`,
/// falling back to the unique completion of `c`.
pub fn run(check: Check, c: &PartialLatinSquare, ambient: Option<&PartialLatinSquare>) -> CheckReport {
    let name = check.name();
    let completion = complete_unique(c);
    let ambient = match (ambient, &completion) {
        (Some(l), _) => Ok(l.clone()),
        (None, Ok(l)) => Ok(l.clone()),
        (None, Err(e)) => Err(e.to_string()),
    };
    let report = |pass: bool, detail: String| CheckReport::new(name, pass, detail);
    match check {
        Check::Unique => match (&completion, &ambient) {
            (Ok(done), Ok(l)) if done != l => report(false, "completion differs from the ambient square".into()),
            (Ok(_), _) => report(true, format!("{} entries, one completion", c.len())),
            (Err(e), _) => report(false, e.to_string()),
        },
        Check::Critical => {
            let pass = is_critical_set(c) && ambient.as_ref().is_ok_and(|l| c.is_subset_of(l));
            let detail = if pass { "minimal defining set" } else { "not a critical set of the ambient square" };
            report(pass, detail.into())
        }
        Check::TwoCritical => match ambient.as_ref().map(|l| is_2_critical(c, l)) {
            Ok(Ok(pass)) => report(pass, if pass { "every entry 2-essential" } else { "some entry is not 2-essential" }.into()),
            Ok(Err(e)) => report(false, e.to_string()),
            Err(e) => report(false, e.clone()),
        },
        Check::Strong => match strong_complete(c) {
            Ok(trace) => report(true, format!("{} forced steps", trace.steps.len())),
            Err(e) => report(false, e.to_string()),
        },
        Check::TopDown => match completes_top_down(c) {
            Ok(td) if td.completes => report(true, "every row fills in order".into()),
            Ok(td) => report(false, format!("stuck at row {}", td.stuck_row.unwrap_or(0))),
            Err(e) => report(false, e.to_string()),
        },
        Check::GcsChar => match ambient.as_ref().map(|l| verify_gcs_characterization(c, l)) {
            Ok(Ok(ch)) => {
                let detail = if ch.holds() && ch.equals_gcs {
                    "least-element witnesses found; equals gcs".to_string()
                } else {
                    format!("{} entries unwitnessed; equals gcs: {}", ch.unwitnessed.len(), ch.equals_gcs)
                };
                report(ch.holds() && ch.equals_gcs, detail)
            }
            Ok(Err(e)) => report(false, e.to_string()),
            Err(e) => report(false, e.clone()),
        },
    }
}

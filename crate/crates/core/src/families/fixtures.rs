//! Reference tables in grid format, embedded at build time.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::{parse_grid, GridDocument};

macro_rules! embed {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../fixtures/", $name, ".grid")))),*]
    };
}

/// `(name, text)` for every table, sorted by name.
pub const EMBEDDED: &[(&str, &str)] = embed![
    "gcs_a01_l2",
    "gcs_a01_l3",
    "gcs_a02_l2",
    "gcs_a02_l3",
    "gcs_a03_l2",
    "gcs_a03_l3",
    "gcs_a12_14_l4",
    "gcs_a12_l2",
    "gcs_a12_l3",
    "gcs_a13_l2",
    "gcs_a13_l3",
    "gcs_a23_l2",
    "gcs_a23_l3",
    "gcs_a45_l3",
    "gcs_a46_l3",
    "gcs_a56_l3",
    "gcs_a57_l3",
    "gcs_a67_l3",
    "h2",
    "l3",
    "p3",
    "u45",
    "u56",
    "u57",
    "u67",
    "v45",
    "v56",
    "v57",
    "v67",
];

/// Parsed tables keyed by name.
#[derive(Debug, Clone)]
pub struct Fixtures {
    tables: BTreeMap<&'static str, GridDocument>,
}

impl Fixtures {
    pub fn embedded() -> Self {
        Self::from_sources(EMBEDDED.iter().map(|&(name, text)| (name, text.to_string())))
            .expect("embedded tables parse")
    }

    /// Reads `<name>.grid` for every known table from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut sources = Vec::with_capacity(EMBEDDED.len());
        for &(name, _) in EMBEDDED {
            let path = dir.join(format!("{name}.grid"));
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            sources.push((name, text));
        }
        Self::from_sources(sources)
    }

    fn from_sources(sources: impl IntoIterator<Item = (&'static str, String)>) -> Result<Self> {
        let mut tables = BTreeMap::new();
        for (name, text) in sources {
            let doc = parse_grid(&text).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse {
                    line,
                    message: format!("{name}: {message}"),
                },
                other => other,
            })?;
            tables.insert(name, doc);
        }
        Ok(Fixtures { tables })
    }

    pub fn get(&self, name: &str) -> Result<&GridDocument> {
        self.tables
            .get(name)
            .ok_or_else(|| Error::Key(format!("table {name}")))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.tables.keys().copied()
    }
}

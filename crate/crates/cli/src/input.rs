use std::path::Path;

use anyhow::{Context, Result};
use dasquare::{catalog, parse_square, IntSquare};
use serde::Serialize;

use crate::fmt::SquareRows;

/// What a report is about.
#[derive(Clone, Debug, Serialize)]
pub struct Subject {
    pub name: String,
    pub provenance: String,
    pub order: usize,
    pub rows: SquareRows,
}

impl Subject {
    pub fn new(name: impl Into<String>, provenance: impl Into<String>, square: &IntSquare) -> Self {
        Self {
            name: name.into(),
            provenance: provenance.into(),
            order: square.order(),
            rows: SquareRows(square.clone()),
        }
    }

    pub fn square(&self) -> &IntSquare {
        &self.rows.0
    }
}

/// An existing file is parsed; anything else is resolved as a name.
pub fn load(input: &str) -> Result<Subject> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let square = parse_square(&text).with_context(|| format!("parsing {}", path.display()))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| input.to_string());
        return Ok(Subject::new(name, format!("file {}", path.display()), &square));
    }
    let square = catalog::resolve(input)?;
    Ok(Subject::new(input, provenance(input), &square))
}

fn provenance(name: &str) -> String {
    if let Some(entry) = catalog::entries()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
    {
        return entry.provenance.to_string();
    }
    let lower = name.to_ascii_lowercase();
    if lower.starts_with("identity") {
        "identity matrix".into()
    } else if lower.starts_with("ones") {
        "all-ones matrix".into()
    } else {
        "order-4 magic square by Frenicle index".into()
    }
}

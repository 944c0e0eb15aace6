use std::path::PathBuf;

use clap::{Parser, Subcommand};
use dasquare::compound::CompoundKind;
use dasquare::powering::DEFAULT_MAX_P;
use dasquare::spectra::Axis;

/// Exact analysis of doubly-affine integer squares.
///
/// INPUT is a matrix file (whitespace, CSV or JSON) or a name: a catalog
/// entry, `identity<n>`, `ones<n>`, or `f<k>` for the k-th order-4 magic
/// square in Frenicle order.
#[derive(Debug, Parser)]
#[command(name = "dasquare", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "md")]
    pub json: bool,

    /// Emit Markdown (the default).
    #[arg(long, global = true)]
    pub md: bool,

    /// Also write an SVG plot (power curves or Gerschgorin disks).
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,

    /// Highest power examined when no constant power appears earlier.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_P)]
    pub max_p: usize,

    /// Gerschgorin axis: off-diagonal sums along rows or along columns.
    #[arg(long, global = true, value_name = "row|column", default_value = "column")]
    pub axis: Axis,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classification, spectra, zero-Jordan structure and power tables.
    Analyze { input: String },
    /// Power trajectory: rank, Compression, Spread, type and R per power.
    Power { input: String },
    /// Builds a compound square from a pattern and a base square.
    Compound {
        pattern: String,
        base: String,
        #[arg(long, default_value = "latin")]
        kind: CompoundKind,
        /// Explicit block increment; skips the classic-square preconditions.
        #[arg(long, value_name = "DELTA")]
        step: Option<String>,
        /// Writes the compound matrix (JSON input form) to this file.
        #[arg(long, short, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Enumerates the order-4 classic magic squares.
    Enumerate4 {
        /// Writes one CSV row per Frenicle form.
        #[arg(long, value_name = "PATH")]
        census: Option<PathBuf>,
        /// Lists the squares with a single nonzero eigenvalue.
        #[arg(long = "find-1ev")]
        find_1ev: bool,
    },
    /// The pair product X·Y, its commutator and the four triple products.
    Products { x: String, y: String },
    /// Gerschgorin disks (center, radius) and eigenvalue containment.
    Gerschgorin { input: String },
    /// Shows a catalog square, or lists the catalog.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Json,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Markdown
        }
    }
}

//! Text formatting shared by the Markdown and SVG renderers.

use dasquare::serde_big::format_sig;
use dasquare::spectra::render_rational;
use dasquare::{BigInt, BigRational, Eigenvalue, IntSquare};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Serializes a square as nested arrays of exact JSON integers.
#[derive(Clone, Debug)]
pub struct SquareRows(pub IntSquare);

impl Serialize for SquareRows {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                dasquare::serde_big::ints(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.0.order()))?;
        for r in self.0.rows() {
            seq.serialize_element(&Row(r))?;
        }
        seq.end()
    }
}

pub fn sig(v: f64) -> String {
    format_sig(v, 6)
}

pub fn opt_sig(v: Option<f64>) -> String {
    v.map_or_else(|| "—".into(), sig)
}

pub fn opt_rational(v: Option<&BigRational>) -> String {
    v.map_or_else(|| "—".into(), render_rational)
}

pub fn opt_int(v: Option<&BigInt>) -> String {
    v.map_or_else(|| "—".into(), ToString::to_string)
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Exact eigenvalues print as integers; the rest as `a ± bi`.
pub fn eigenvalue(e: &Eigenvalue) -> String {
    if let Some(k) = &e.exact {
        return k.to_string();
    }
    let scale = e.re.abs().max(e.im.abs()).max(1.0);
    if e.im.abs() <= 1e-9 * scale {
        return sig(e.re);
    }
    let sign = if e.im < 0.0 { "-" } else { "+" };
    format!("{}{sign}{}i", sig(e.re), sig(e.im.abs()))
}

pub fn eigenvalues(es: &[Eigenvalue]) -> String {
    es.iter().map(eigenvalue).collect::<Vec<_>>().join(", ")
}

pub fn floats(vs: &[f64]) -> String {
    vs.iter().map(|&v| sig(v)).collect::<Vec<_>>().join(", ")
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

/// `E₄`, `E₁₆`: the all-ones square of order `n`.
pub fn ones_symbol(n: usize) -> String {
    let digits: String = n
        .to_string()
        .chars()
        .map(|c| SUBSCRIPTS[c.to_digit(10).expect("decimal digit") as usize])
        .collect();
    format!("E{digits}")
}

/// `√k` simplified to `a√b` with `b` square-free; perfect squares print bare.
pub fn surd(k: u64) -> String {
    if k == 0 {
        return "0".into();
    }
    let mut outside = 1u64;
    let mut inside = k;
    let mut f = 2u64;
    while f * f <= inside {
        while inside.is_multiple_of(f * f) {
            inside /= f * f;
            outside *= f;
        }
        f += 1;
    }
    match (outside, inside) {
        (a, 1) => a.to_string(),
        (1, b) => format!("√{b}"),
        (a, b) => format!("{a}√{b}"),
    }
}

/// Right-aligned plain-text rendering of a square.
pub fn matrix_block(a: &IntSquare) -> String {
    let cells: Vec<String> = a.entries().iter().map(ToString::to_string).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(1);
    let n = a.order();
    let mut out = String::new();
    for row in cells.chunks(n) {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// A Markdown table with a header row.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(header: &[S]) -> Self {
        Self {
            header: header.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: ToString>(&mut self, cells: &[S]) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells.iter().map(ToString::to_string).collect());
    }

    pub fn render(&self) -> String {
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        let mut out = line(&self.header);
        out.push_str(&format!("|{}\n", "---|".repeat(self.header.len())));
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }
}

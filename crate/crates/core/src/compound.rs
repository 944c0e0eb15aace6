//! Compound squares, products and commutators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::classify::classify;
use crate::{Error, IntSquare, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompoundKind {
    Latin,
    Magic,
}

impl FromStr for CompoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "latin" => Ok(Self::Latin),
            "magic" => Ok(Self::Magic),
            other => Err(Error::Parse(format!("unknown compound kind `{other}`"))),
        }
    }
}

impl fmt::Display for CompoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Latin => "latin",
            Self::Magic => "magic",
        })
    }
}

/// Block `(i, j)` of the order-`m·n` result is `base + (pattern[i][j] − 1)·δ`,
/// with `δ = n` for Latin and `δ = n²` for magic compounds.
pub fn compound(pattern: &IntSquare, base: &IntSquare, kind: CompoundKind) -> Result<IntSquare> {
    let pf = classify(pattern);
    let bf = classify(base);
    let n = base.order();
    let delta = match kind {
        CompoundKind::Latin => {
            if !bf.is_classic_latin {
                return Err(Error::CompoundPrecondition("base is not a classic Latin square".into()));
            }
            if !pf.is_classic_latin {
                return Err(Error::CompoundPrecondition(
                    "pattern is not a classic Latin square".into(),
                ));
            }
            n
        }
        CompoundKind::Magic => {
            if !bf.is_classic_magic {
                return Err(Error::CompoundPrecondition("base is not a classic magic square".into()));
            }
            if !(pf.is_classic_magic || pf.is_classic_latin) {
                return Err(Error::CompoundPrecondition(
                    "pattern is neither classic magic nor classic Latin".into(),
                ));
            }
            n * n
        }
    };
    compound_with_step(pattern, base, &BigInt::from(delta))
}

/// Compounding with an explicit block increment and no precondition on the
/// operands.
pub fn compound_with_step(pattern: &IntSquare, base: &IntSquare, delta: &BigInt) -> Result<IntSquare> {
    let m = pattern.order();
    let n = base.order();
    let one = BigInt::from(1);
    Ok(IntSquare::from_fn(m * n, |i, j| {
        let shift = (pattern.get(i / n, j / n) - &one) * delta;
        base.get(i % n, j % n) + shift
    }))
}

/// `AB − BA`.
pub fn commutator(a: &IntSquare, b: &IntSquare) -> Result<IntSquare> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Products of a pair `P = X·Y` with each factor on each side.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleProducts {
    pub pair: IntSquare,
    /// `X·P = X·X·Y`
    pub x_p: IntSquare,
    /// `P·X = X·Y·X`
    pub p_x: IntSquare,
    /// `P·Y = X·Y·Y`
    pub p_y: IntSquare,
    /// `Y·P = Y·X·Y`
    pub y_p: IntSquare,
}

pub fn triple_products(x: &IntSquare, y: &IntSquare) -> Result<TripleProducts> {
    let pair = x.mul(y)?;
    Ok(TripleProducts {
        x_p: x.mul(&pair)?,
        p_x: pair.mul(x)?,
        p_y: pair.mul(y)?,
        y_p: y.mul(&pair)?,
        pair,
    })
}

impl TripleProducts {
    pub fn labelled(&self) -> [(&'static str, &IntSquare); 4] {
        [("X·P", &self.x_p), ("P·X", &self.p_x), ("P·Y", &self.p_y), ("Y·P", &self.y_p)]
    }
}

//! Serializers that write exact integers and rationals as JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::{Error as _, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::Number;

fn number<S: Serializer>(text: &str, s: S) -> Result<S::Ok, S::Error> {
    Number::from_str(text).map_err(S::Error::custom)?.serialize(s)
}

pub fn int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    number(&v.to_string(), s)
}

pub fn opt_int<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => int(v, s),
        None => s.serialize_none(),
    }
}

pub fn ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Number::from_str(&x.to_string()).map_err(S::Error::custom)?)?;
    }
    seq.end()
}

/// `"p/q"` or a plain integer.
pub fn rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    if v.is_integer() {
        int(v.numer(), s)
    } else {
        s.serialize_str(&v.to_string())
    }
}

/// Six significant digits, as a JSON number.
pub fn float6<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    number(&format_sig(*v, 6), s)
}

pub fn floats6<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Number::from_str(&format_sig(*x, 6)).map_err(S::Error::custom)?)?;
    }
    seq.end()
}

/// Formats `v` with `digits` significant digits, trimming trailing zeros.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() { "0".into() } else { "null".into() };
    }
    // Scientific formatting rounds first, so the exponent already reflects
    // any carry (9.9999996 -> 1.00000e1).
    let sci = format!("{:.*e}", digits.saturating_sub(1), v);
    let magnitude: i32 = sci[sci.find('e').expect("exponent") + 1..].parse().expect("exponent");
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let text = format!("{v:.decimals$}");
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

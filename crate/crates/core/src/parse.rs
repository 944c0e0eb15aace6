//! Reading squares from text.
//!
//! Two forms are accepted:
//!
//! * plain text: integers separated by whitespace and/or commas, row breaks
//!   optional, with a perfect-square count of values;
//! * JSON: `{"order": n, "rows": [[...], ...]}`.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::{Error, IntSquare, Result};

#[derive(Deserialize)]
struct JsonSquare {
    order: usize,
    rows: Vec<Vec<serde_json::Number>>,
}

pub fn parse_square(text: &str) -> Result<IntSquare> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(trimmed)
    } else {
        parse_plain(text)
    }
}

fn parse_plain(text: &str) -> Result<IntSquare> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(parse_int)
        .collect::<Result<Vec<_>>>()?;
    if values.is_empty() {
        return Err(Error::EmptySquare);
    }
    let order = exact_sqrt(values.len()).ok_or(Error::NotSquareCount(values.len()))?;
    IntSquare::new(order, values)
}

fn parse_json(text: &str) -> Result<IntSquare> {
    let js: JsonSquare = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if js.order == 0 {
        return Err(Error::EmptySquare);
    }
    if js.rows.len() != js.order || js.rows.iter().any(|r| r.len() != js.order) {
        return Err(Error::Parse(format!(
            "\"rows\" does not have shape {0}x{0}",
            js.order
        )));
    }
    let entries = js
        .rows
        .iter()
        .flatten()
        .map(|num| parse_int(&num.to_string()))
        .collect::<Result<Vec<_>>>()?;
    IntSquare::new(js.order, entries)
}

fn parse_int(tok: &str) -> Result<BigInt> {
    tok.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("`{tok}` is not an integer")))
}

fn exact_sqrt(count: usize) -> Option<usize> {
    let root = (count as f64).sqrt().round() as usize;
    (root * root == count).then_some(root)
}

/// Renders a square in the JSON input form.
pub fn to_json(square: &IntSquare) -> String {
    let rows: Vec<String> = square
        .rows()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("{{\"order\":{},\"rows\":[{}]}}", square.order(), rows.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_two_by_two() {
        let a = parse_square("1 2\n3 4").unwrap();
        assert_eq!(a, IntSquare::from_rows(&[[1, 2], [3, 4]]).unwrap());
    }

    #[test]
    fn commas_and_no_row_breaks() {
        let a = parse_square("1,2,3,4, 3,4,1,2 4 3 2 1\n2,1,4,3").unwrap();
        assert_eq!(a.order(), 4);
        assert_eq!(a.get(3, 2), &BigInt::from(4));
    }

    #[test]
    fn non_square_count() {
        assert_eq!(parse_square("1 2 3"), Err(Error::NotSquareCount(3)));
    }

    #[test]
    fn bad_token() {
        assert!(matches!(parse_square("1 2 x 4"), Err(Error::Parse(_))));
        assert!(matches!(parse_square("1 2 3.5 4"), Err(Error::Parse(_))));
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_square("  \n "), Err(Error::EmptySquare));
    }

    #[test]
    fn json_form() {
        let a = parse_square(r#"{"order": 2, "rows": [[1, -2], [3, 40000000000000000000000]]}"#)
            .unwrap();
        assert_eq!(a.get(1, 1), &"40000000000000000000000".parse::<BigInt>().unwrap());
        assert_eq!(a.get(0, 1), &BigInt::from(-2));
    }

    #[test]
    fn json_shape_errors() {
        assert!(parse_square(r#"{"order": 2, "rows": [[1, 2]]}"#).is_err());
        assert!(parse_square(r#"{"order": 0, "rows": []}"#).is_err());
        assert!(parse_square(r#"{"order": 1, "rows": [[1.5]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn json_and_plain_roundtrip(n in 1usize..6, seed in proptest::collection::vec(-1000i64..1000, 36)) {
            let a = IntSquare::from_fn(n, |i, j| BigInt::from(seed[i * n + j]));
            prop_assert_eq!(parse_square(&to_json(&a)).unwrap(), a.clone());
            prop_assert_eq!(parse_square(&a.to_string()).unwrap(), a);
        }
    }
}

//! Named squares used throughout the analyses.
//!
//! Order-4 magic squares are named `f<k>` after their Frenicle index. Names
//! outside the static list (`f790`, `identity5`, …) are resolved by
//! [`resolve`], which may build the order-4 census.

use num_bigint::BigInt;

use crate::{census, Error, IntSquare, Result};

#[derive(Clone, Debug)]
pub struct Expected {
    pub linesum: Option<i64>,
    pub one_ev: bool,
    pub r_index: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub square: IntSquare,
    pub provenance: &'static str,
    pub expected: Expected,
}

fn sq<const N: usize>(rows: [[i64; N]; N]) -> IntSquare {
    IntSquare::from_rows(&rows).expect("static square")
}

/// Four-symbol diagonal Latin square (mini-Sudoku), constant from the cube on.
pub fn sud4a() -> IntSquare {
    sq([[1, 2, 3, 4], [3, 4, 1, 2], [4, 3, 2, 1], [2, 1, 4, 3]])
}

/// `sud4a` with its second row moved to the bottom.
pub fn lat4a() -> IntSquare {
    sq([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]])
}

pub fn loshu() -> IntSquare {
    sq([[4, 9, 2], [3, 5, 7], [8, 1, 6]])
}

pub fn f360() -> IntSquare {
    sq([[2, 11, 7, 14], [13, 8, 12, 1], [16, 5, 9, 4], [3, 10, 6, 15]])
}

pub fn f299() -> IntSquare {
    sq([[2, 7, 13, 12], [16, 9, 3, 6], [11, 14, 8, 1], [5, 4, 10, 15]])
}

pub fn f175() -> IntSquare {
    sq([[1, 12, 8, 13], [14, 7, 11, 2], [15, 6, 10, 3], [4, 9, 5, 16]])
}

pub fn f181() -> IntSquare {
    sq([[1, 12, 13, 8], [16, 9, 4, 5], [2, 7, 14, 11], [15, 6, 3, 10]])
}

/// Order-5 associative magic square with a single nonzero eigenvalue.
pub fn laa44() -> IntSquare {
    sq([
        [2, 11, 21, 23, 8],
        [16, 14, 7, 6, 22],
        [25, 17, 13, 9, 1],
        [4, 20, 19, 12, 10],
        [18, 3, 5, 15, 24],
    ])
}

/// Row-permuted Franklin square; the top-right cell carries the corrected 19.
pub fn bf() -> IntSquare {
    sq([
        [14, 3, 62, 51, 46, 35, 30, 19],
        [52, 61, 4, 13, 20, 29, 36, 45],
        [11, 6, 59, 54, 43, 38, 27, 22],
        [53, 60, 5, 12, 21, 28, 37, 44],
        [55, 58, 7, 10, 23, 26, 39, 42],
        [9, 8, 57, 56, 41, 40, 25, 24],
        [50, 63, 2, 15, 18, 31, 34, 47],
        [16, 1, 64, 49, 48, 33, 32, 17],
    ])
}

/// Freitag's magic square on sixteen Fibonacci-derived values.
pub fn freitag() -> IntSquare {
    sq([
        [13, 89, 97, 34],
        [110, 21, 63, 39],
        [68, 94, 55, 16],
        [42, 29, 18, 144],
    ])
}

/// `sud4a`'s pattern on the primes 199, 409, 619, 829 (common difference 210).
pub fn prime_latin() -> IntSquare {
    sq([
        [199, 409, 619, 829],
        [619, 829, 199, 409],
        [829, 619, 409, 199],
        [409, 199, 829, 619],
    ])
}

pub fn entries() -> Vec<CatalogEntry> {
    let e = |linesum, one_ev, r_index| Expected { linesum: Some(linesum), one_ev, r_index };
    vec![
        CatalogEntry {
            name: "sud4a",
            square: sud4a(),
            provenance: "order-4 diagonal Latin square (mini-Sudoku)",
            expected: e(10, true, Some(272)),
        },
        CatalogEntry {
            name: "lat4a",
            square: lat4a(),
            provenance: "order-4 Latin square, sud4a with row 2 moved last",
            expected: e(10, false, Some(272)),
        },
        CatalogEntry {
            name: "loshu",
            square: loshu(),
            provenance: "the order-3 magic square",
            expected: e(15, false, Some(2448)),
        },
        CatalogEntry {
            name: "f360",
            square: f360(),
            provenance: "order-4 associative magic square, clan alpha",
            expected: e(34, true, Some(102_800)),
        },
        CatalogEntry {
            name: "f299",
            square: f299(),
            provenance: "order-4 associative magic square, clan beta",
            expected: e(34, true, Some(78_608)),
        },
        CatalogEntry {
            name: "f175",
            square: f175(),
            provenance: "order-4 associative magic square with three nonzero eigenvalues",
            expected: e(34, false, Some(102_800)),
        },
        CatalogEntry {
            name: "f181",
            square: f181(),
            provenance: "order-4 non-singular magic square",
            expected: e(34, false, None),
        },
        CatalogEntry {
            name: "laa44",
            square: laa44(),
            provenance: "order-5 associative magic square with one nonzero eigenvalue",
            expected: e(65, true, Some(706_000)),
        },
        CatalogEntry {
            name: "BF",
            square: bf(),
            provenance: "order-8 row-permuted Franklin square (corrected top-right cell)",
            expected: e(260, true, Some(463_223_040)),
        },
        CatalogEntry {
            name: "freitag",
            square: freitag(),
            provenance: "Freitag's order-4 Fibonacci magic square",
            expected: e(233, false, None),
        },
        CatalogEntry {
            name: "prime_latin",
            square: prime_latin(),
            provenance: "order-4 Latin square on primes in arithmetic progression",
            expected: e(2056, true, None),
        },
    ]
}

/// Looks up a static catalog entry by name (case-insensitive).
pub fn catalog(name: &str) -> Result<IntSquare> {
    entries()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(|e| e.square)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Resolves catalog names, `identity<n>`, `ones<n>`, and `f<k>` Frenicle
/// indices (the latter through the census).
pub fn resolve(name: &str) -> Result<IntSquare> {
    if let Ok(sq) = catalog(name) {
        return Ok(sq);
    }
    let lower = name.to_ascii_lowercase();
    let numbered = |prefix: &str| -> Option<usize> {
        lower.strip_prefix(prefix).and_then(|rest| rest.parse().ok())
    };
    if let Some(n) = numbered("identity").filter(|&n| n > 0) {
        return Ok(IntSquare::identity(n));
    }
    if let Some(n) = numbered("ones").filter(|&n| n > 0) {
        return Ok(IntSquare::constant(n, BigInt::from(1)));
    }
    if let Some(k) = numbered("f") {
        return census::Census::shared().square(k).cloned();
    }
    Err(Error::UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sud4a_verbatim() {
        assert_eq!(
            catalog("sud4a").unwrap().to_i64_rows().unwrap(),
            vec![vec![1, 2, 3, 4], vec![3, 4, 1, 2], vec![4, 3, 2, 1], vec![2, 1, 4, 3]]
        );
    }

    #[test]
    fn bf_corrected_cell() {
        assert_eq!(catalog("BF").unwrap().get(0, 7), &BigInt::from(19));
        assert_eq!(catalog("bf").unwrap(), bf());
    }

    #[test]
    fn loshu_rows_sum_to_fifteen() {
        let l = catalog("loshu").unwrap();
        assert!(l.rows().all(|r| r.iter().sum::<BigInt>() == BigInt::from(15)));
    }

    #[test]
    fn unknown_names() {
        assert_eq!(catalog("nope"), Err(Error::UnknownName("nope".into())));
        assert!(resolve("identity0").is_err());
        assert!(resolve("fx").is_err());
    }

    #[test]
    fn dynamic_names() {
        assert_eq!(resolve("identity3").unwrap(), IntSquare::identity(3));
        assert_eq!(resolve("ones2").unwrap(), IntSquare::ones(2));
    }

    #[test]
    fn expected_linesums_hold() {
        for entry in entries() {
            let l = crate::classify::linesum(&entry.square).map(|l| l.to_string());
            assert_eq!(l, entry.expected.linesum.map(|l| l.to_string()), "{}", entry.name);
        }
    }
}

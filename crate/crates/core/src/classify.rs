//! Line sums and structural classification.
//!
//! Terminology: a square is doubly-affine (DA) when all row and column sums
//! share one linesum, and diagonal doubly-affine (DDA) when both main diagonals
//! also have it. "Magic" is reserved for DDA squares on `1..n²`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::IntSquare;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSumReport {
    pub row_sums: Vec<BigInt>,
    pub col_sums: Vec<BigInt>,
    pub d1: BigInt,
    pub d2: BigInt,
    /// `[0]`: cells `(i, i+k)`, `[1]`: cells `(i, k−i)`, indices mod n, for `k = 0..n`.
    pub broken_diag_sums: [Vec<BigInt>; 2],
    /// Left and right half of each row (even orders only).
    pub half_row_sums: Option<Vec<BigInt>>,
    /// Top and bottom half of each column (even orders only).
    pub half_col_sums: Option<Vec<BigInt>>,
    /// Down-V, up-V, right-V and left-V bent diagonals (orders divisible by 4).
    pub bent_sums: Option<[Vec<BigInt>; 4]>,
}

impl LineSumReport {
    /// The common row/column sum, if there is one.
    pub fn linesum(&self) -> Option<&BigInt> {
        let l = &self.row_sums[0];
        (self.row_sums.iter().all(|s| s == l) && self.col_sums.iter().all(|s| s == l)).then_some(l)
    }
}

/// The bend offset of a V-path at position `k`: `min(k, n−1−k)`.
#[inline]
fn bend(n: usize, k: usize) -> usize {
    k.min(n - 1 - k)
}

/// The four bent-diagonal families; each has `n` anchors.
///
/// Down-V at row `r` visits `(r + bend(j), j)`; up-V visits `(r − bend(j), j)`;
/// right-V at column `c` visits `(i, c + bend(i))`; left-V visits `(i, c − bend(i))`.
pub fn bent_diagonal_cells(n: usize, family: usize, anchor: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|k| {
            let b = bend(n, k);
            match family {
                0 => ((anchor + b) % n, k),
                1 => ((anchor + n - b) % n, k),
                2 => (k, (anchor + b) % n),
                3 => (k, (anchor + n - b) % n),
                _ => panic!("bent family must be 0..4"),
            }
        })
        .collect()
}

pub fn line_sums(a: &IntSquare) -> LineSumReport {
    let n = a.order();
    let sum_cells = |cells: &mut dyn Iterator<Item = (usize, usize)>| -> BigInt {
        cells.map(|(i, j)| a.get(i, j)).sum()
    };
    let row_sums: Vec<BigInt> = a.rows().map(|r| r.iter().sum()).collect();
    let col_sums = (0..n).map(|j| sum_cells(&mut (0..n).map(|i| (i, j)))).collect();
    let d1 = sum_cells(&mut (0..n).map(|i| (i, i)));
    let d2 = sum_cells(&mut (0..n).map(|i| (i, n - 1 - i)));
    let broken_diag_sums = [
        (0..n)
            .map(|k| sum_cells(&mut (0..n).map(|i| (i, (i + k) % n))))
            .collect(),
        (0..n)
            .map(|k| sum_cells(&mut (0..n).map(|i| (i, (k + n - i) % n))))
            .collect(),
    ];
    let (half_row_sums, half_col_sums) = if n.is_multiple_of(2) {
        let h = n / 2;
        let rows = (0..n)
            .flat_map(|i| [(0, h), (h, n)].map(|(s, e)| sum_cells(&mut (s..e).map(|j| (i, j)))))
            .collect();
        let cols = (0..n)
            .flat_map(|j| [(0, h), (h, n)].map(|(s, e)| sum_cells(&mut (s..e).map(|i| (i, j)))))
            .collect();
        (Some(rows), Some(cols))
    } else {
        (None, None)
    };
    let bent_sums = n.is_multiple_of(4).then(|| {
        [0, 1, 2, 3].map(|family| {
            (0..n)
                .map(|anchor| sum_cells(&mut bent_diagonal_cells(n, family, anchor).into_iter()))
                .collect()
        })
    });
    LineSumReport {
        row_sums,
        col_sums,
        d1,
        d2,
        broken_diag_sums,
        half_row_sums,
        half_col_sums,
        bent_sums,
    }
}

/// Coarse type used in power tables: constant ≻ DDA ≻ DA ≻ none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TypeLabel {
    #[serde(rename = "none")]
    None,
    DA,
    DDA,
    #[serde(rename = "constant")]
    Constant,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeLabel::None => "none",
            TypeLabel::DA => "DA",
            TypeLabel::DDA => "DDA",
            TypeLabel::Constant => "constant",
        })
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub is_DA: bool,
    pub is_DDA: bool,
    pub is_latin: bool,
    pub is_diagonal_latin: bool,
    pub is_classic_magic: bool,
    pub is_classic_latin: bool,
    pub is_associative: bool,
    pub is_pandiagonal: bool,
    pub is_ultramagic: bool,
    pub franklin_half_sums: bool,
    pub franklin_bent: bool,
    pub franklin_quartet: bool,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub linesum: Option<BigInt>,
    /// The antipodal pair sum when the square is associative.
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub associative_constant: Option<BigInt>,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub d1: BigInt,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub d2: BigInt,
    pub type_label: TypeLabel,
}

fn all_distinct<'a>(cells: impl Iterator<Item = &'a BigInt>, n: usize) -> bool {
    cells.collect::<BTreeSet<_>>().len() == n
}

fn all_equal<'a>(mut values: impl Iterator<Item = &'a BigInt>) -> Option<&'a BigInt> {
    let first = values.next()?;
    values.all(|v| v == first).then_some(first)
}

pub fn classify(a: &IntSquare) -> ClassificationFlags {
    let n = a.order();
    let sums = line_sums(a);
    let linesum = sums.linesum().cloned();
    let is_da = linesum.is_some();
    let is_dda = linesum.as_ref().is_some_and(|l| &sums.d1 == l && &sums.d2 == l);

    let symbols: BTreeSet<&BigInt> = a.entries().iter().collect();
    let is_latin = symbols.len() == n
        && a.rows().all(|r| all_distinct(r.iter(), n))
        && (0..n).all(|j| all_distinct((0..n).map(|i| a.get(i, j)), n));
    let is_diagonal_latin = is_latin
        && all_distinct((0..n).map(|i| a.get(i, i)), n)
        && all_distinct((0..n).map(|i| a.get(i, n - 1 - i)), n);
    let is_classic_latin =
        is_latin && symbols.iter().zip(1..=n).all(|(s, k)| **s == BigInt::from(k));

    let mut sorted: Vec<&BigInt> = a.entries().iter().collect();
    sorted.sort();
    let is_permutation = sorted
        .iter()
        .zip(1..=n * n)
        .all(|(s, k)| **s == BigInt::from(k));
    let is_classic_magic = is_dda && is_permutation;

    let antipodal: Vec<BigInt> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a.get(i, j) + a.get(n - 1 - i, n - 1 - j))
        .collect();
    let associative_constant = all_equal(antipodal.iter()).cloned();
    let is_associative = associative_constant.is_some();

    let is_pandiagonal = linesum.as_ref().is_some_and(|l| {
        sums.broken_diag_sums.iter().flatten().all(|s| s == l)
    });
    let is_ultramagic = is_associative && is_pandiagonal && is_dda;

    let franklin_half_sums = match (&sums.half_row_sums, &sums.half_col_sums) {
        (Some(r), Some(c)) => all_equal(r.iter().chain(c)).is_some(),
        _ => false,
    };
    let franklin_bent = match (&linesum, &sums.bent_sums) {
        (Some(l), Some(b)) => b.iter().flatten().all(|s| s == l),
        _ => false,
    };
    let franklin_quartet = n >= 2
        && linesum.as_ref().is_some_and(|l| {
            let target = l * BigInt::from(4);
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let q: BigInt = [(0, 0), (0, 1), (1, 0), (1, 1)]
                        .iter()
                        .map(|(di, dj)| a.get((i + di) % n, (j + dj) % n))
                        .sum();
                    q * BigInt::from(n) == target
                })
            })
        });

    let type_label = if a.is_constant().is_some() {
        TypeLabel::Constant
    } else if is_dda {
        TypeLabel::DDA
    } else if is_da {
        TypeLabel::DA
    } else {
        TypeLabel::None
    };

    ClassificationFlags {
        is_DA: is_da,
        is_DDA: is_dda,
        is_latin,
        is_diagonal_latin,
        is_classic_magic,
        is_classic_latin,
        is_associative,
        is_pandiagonal,
        is_ultramagic,
        franklin_half_sums,
        franklin_bent,
        franklin_quartet,
        linesum,
        associative_constant,
        d1: sums.d1,
        d2: sums.d2,
        type_label,
    }
}

/// Linesum of a DA square.
pub fn linesum(a: &IntSquare) -> Option<BigInt> {
    let n = a.order();
    let l: BigInt = a.row(0).iter().sum();
    let rows_ok = a.rows().all(|r| r.iter().sum::<BigInt>() == l);
    let cols_ok = (0..n).all(|j| (0..n).map(|i| a.get(i, j)).sum::<BigInt>() == l);
    (rows_ok && cols_ok).then_some(l)
}

/// `n(1 + n²)/2`, the linesum of a classic magic square.
pub fn magic_constant(n: usize) -> BigInt {
    BigInt::from(n) * (BigInt::one() + BigInt::from(n * n)) / 2
}

/// `n(1 + n)/2`, the linesum of a classic Latin square.
pub fn latin_constant(n: usize) -> BigInt {
    BigInt::from(n) * (BigInt::one() + BigInt::from(n)) / 2
}

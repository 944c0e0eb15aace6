//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::IntSquare;

impl IntSquare {
    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.to_rows()).rank
    }

    pub fn det(&self) -> BigInt {
        bareiss(self.to_rows()).det
    }
}

pub(crate) struct Echelon {
    pub rank: usize,
    /// Determinant, meaningful only when the input was square.
    pub det: BigInt,
}

/// Row-reduces `rows` (all of equal length) in place.
///
/// Pivots are the first nonzero entry at or below the current row, so results
/// are deterministic. Every intermediate entry is a minor of the input, which
/// makes each division by the previous pivot exact.
pub(crate) fn bareiss(mut rows: Vec<Vec<BigInt>>) -> Echelon {
    let m = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign_flips = 0usize;

    for col in 0..cols {
        if rank == m {
            break;
        }
        let Some(pivot) = (rank..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            rows.swap(pivot, rank);
            sign_flips += 1;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = &prow[col] * &row[j] - &factor * &prow[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }

    let det = if rank == m && m == cols {
        if sign_flips % 2 == 1 {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    Echelon { rank, det }
}

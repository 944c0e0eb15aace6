//! Squares over exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::elimination::bareiss;
use crate::{Error, IntSquare, Result};

/// Order-n square of reduced rationals (positive denominators).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSquare {
    order: usize,
    entries: Vec<BigRational>,
}

impl RationalSquare {
    pub fn new(order: usize, entries: Vec<BigRational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySquare);
        }
        if entries.len() != order * order {
            return Err(Error::NotSquareCount(entries.len()));
        }
        // BigRational keeps itself reduced with a positive denominator.
        Ok(Self { order, entries })
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![BigRational::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let n = self.order;
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(Self { order: n, entries: out })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        self.entries
            .chunks(self.order)
            .map(|r| r.iter().sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.order)
            .map(|j| (0..self.order).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Common denominator `d` and the integer square `d · self`.
    pub fn clear_denominators(&self) -> (BigInt, IntSquare) {
        let d = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled = IntSquare::from_fn(self.order, |i, j| {
            let q = self.get(i, j);
            q.numer() * (&d / q.denom())
        });
        (d, scaled)
    }

    /// Exact rank (scaling by a common denominator does not change it).
    pub fn rank(&self) -> usize {
        let (_, scaled) = self.clear_denominators();
        bareiss(scaled.to_rows()).rank
    }
}

impl From<&IntSquare> for RationalSquare {
    fn from(a: &IntSquare) -> Self {
        Self {
            order: a.order(),
            entries: a.entries().iter().cloned().map(BigRational::from_integer).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn entries_are_reduced() {
        let r = RationalSquare::new(1, vec![q(4, -6)]).unwrap();
        assert_eq!(r.get(0, 0).numer(), &BigInt::from(-2));
        assert_eq!(r.get(0, 0).denom(), &BigInt::from(3));
    }

    #[test]
    fn rank_of_rational_square() {
        let r = RationalSquare::new(2, vec![q(1, 2), q(1, 3), q(1, 4), q(1, 6)]).unwrap();
        assert_eq!(r.rank(), 1);
        let (d, s) = r.clear_denominators();
        assert_eq!(d, BigInt::from(12));
        assert_eq!(s.get(0, 0), &BigInt::from(6));
    }

    #[test]
    fn product_matches_integer_product() {
        let a = IntSquare::from_rows(&[[1, 2], [3, 4]]).unwrap();
        let ra = RationalSquare::from(&a);
        let prod = ra.mul(&ra).unwrap();
        assert_eq!(prod, RationalSquare::from(&a.pow(2).unwrap()));
    }
}

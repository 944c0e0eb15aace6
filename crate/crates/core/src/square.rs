//! Dense square matrices over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// An order-n square of exact integers, stored row-major.
///
/// Every operation returns a new value; inputs are never mutated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSquare {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntSquare {
    pub fn new(order: usize, entries: Vec<BigInt>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySquare);
        }
        if entries.len() != order * order {
            return Err(Error::NotSquareCount(entries.len()));
        }
        Ok(Self { order, entries })
    }

    /// Builds a square from rows of anything convertible into [`BigInt`].
    pub fn from_rows<T, R>(rows: &[R]) -> Result<Self>
    where
        T: Clone + Into<BigInt>,
        R: AsRef<[T]>,
    {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptySquare);
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::Parse(format!(
                    "row of length {} in a square of order {order}",
                    row.len()
                )));
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(order > 0, "order must be positive");
        let entries = (0..order * order).map(|k| f(k / order, k % order)).collect();
        Self { order, entries }
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| BigInt::zero())
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    /// The all-ones square `E_n`.
    pub fn ones(order: usize) -> Self {
        Self::constant(order, BigInt::one())
    }

    /// `c · E_n`.
    pub fn constant(order: usize, value: BigInt) -> Self {
        Self::from_fn(order, |_, _| value.clone())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(<[BigInt]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Exact matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let other_row = other.row(k);
                let out_row = &mut out[i * n..(i + 1) * n];
                for (acc, b) in out_row.iter_mut().zip(other_row) {
                    *acc += a * b;
                }
            }
        }
        Ok(Self { order: n, entries: out })
    }

    /// `self^p` by iterated multiplication, `p ≥ 1`.
    pub fn pow(&self, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..p {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Successive powers `A, A², A³, …` (unbounded).
    pub fn powers(&self) -> Powers<'_> {
        Powers { base: self, current: None }
    }

    /// The Gramian `AᵀA`, whose eigenvalues are the squared singular values.
    pub fn gramian(&self) -> Self {
        let n = self.order;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v: BigInt = (0..n).map(|k| self.get(k, i) * self.get(k, j)).sum();
                if i != j {
                    out[j * n + i] = v.clone();
                }
                out[i * n + j] = v;
            }
        }
        Self { order: n, entries: out }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self { order: self.order, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { order: self.order, entries })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let entries = self.entries.iter().map(|a| a * c).collect();
        Self { order: self.order, entries }
    }

    /// Adds `c` to every entry (`A + c·E_n`).
    pub fn shift(&self, c: &BigInt) -> Self {
        let entries = self.entries.iter().map(|a| a + c).collect();
        Self { order: self.order, entries }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Returns `c` when the square equals `c · E_n`.
    pub fn is_constant(&self) -> Option<BigInt> {
        let first = &self.entries[0];
        self.entries.iter().all(|e| e == first).then(|| first.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn min_entry(&self) -> &BigInt {
        self.entries.iter().min().expect("non-empty")
    }

    pub fn max_entry(&self) -> &BigInt {
        self.entries.iter().max().expect("non-empty")
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.entries.iter().any(Signed::is_negative)
    }

    /// Sum of squared entries, `trace(AᵀA)`.
    pub fn frobenius_sq(&self) -> BigInt {
        self.entries.iter().map(|a| a * a).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|a| a.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| r.iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }
}

pub struct Powers<'a> {
    base: &'a IntSquare,
    current: Option<IntSquare>,
}

impl Iterator for Powers<'_> {
    type Item = IntSquare;

    fn next(&mut self) -> Option<IntSquare> {
        let next = match &self.current {
            None => self.base.clone(),
            Some(prev) => prev.mul(self.base).expect("same order"),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

impl fmt::Display for IntSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.order).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntSquare(n={}) [", self.order)?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

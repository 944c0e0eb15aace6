//! Exact characteristic polynomials.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, IntSquare, Result};

/// A monic integer polynomial `p(x) = Σ cᵢ xⁱ`, coefficients stored from `c₀` up.
///
/// For a square `A` this is `det(xI − A)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(Self { coeffs }),
            _ => Err(Error::Parse("polynomial must be monic".into())),
        }
    }

    /// Expands `Π (x − rᵢ)`.
    pub fn from_roots(roots: &[BigInt]) -> Self {
        roots.iter().fold(Self::x_pow(0), |acc, r| {
            &acc * &Self { coeffs: vec![-r, BigInt::one()] }
        })
    }

    /// `xᵏ`.
    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `xⁿ − L·xⁿ⁻¹`, the shape of a single-nonzero-eigenvalue square.
    pub fn one_ev(n: usize, linesum: &BigInt) -> Self {
        let mut p = Self::x_pow(n);
        if n >= 1 {
            p.coeffs[n - 1] = -linesum;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `Σ |cᵢ| |x|ⁱ`, the natural scale for judging `p(x) ≈ 0` in floating point.
    pub fn eval_scale(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * ax + c.abs().to_f64().unwrap_or(f64::NAN))
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &IntSquare) -> Result<IntSquare> {
        let n = a.order();
        let mut acc = IntSquare::zeros(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&IntSquare::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    /// Multiplicity of the root 0 (number of vanishing low-order coefficients).
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^μ`, returning the cofactor.
    pub fn strip_zero_roots(&self) -> Self {
        let mu = self.zero_multiplicity();
        Self {
            coeffs: self.coeffs[mu..].to_vec(),
        }
    }

    /// Exact division by `(x − r)`, or `None` if `r` is not a root.
    pub fn divide_by_root(&self, r: &BigInt) -> Option<Self> {
        let n = self.degree();
        if n == 0 {
            return None;
        }
        // Synthetic division from the leading coefficient down.
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for i in (1..=n).rev() {
            carry = &carry * r + &self.coeffs[i];
            quotient[i - 1] = carry.clone();
        }
        let remainder = carry * r + &self.coeffs[0];
        remainder.is_zero().then_some(Self { coeffs: quotient })
    }

    /// True when the polynomial is exactly `xⁿ − L·xⁿ⁻¹` for some `L ≠ 0`;
    /// returns that `L`.
    pub fn single_nonzero_root(&self) -> Option<BigInt> {
        let n = self.degree();
        if n == 0 || self.zero_multiplicity() != n - 1 {
            return None;
        }
        let l = -&self.coeffs[n - 1];
        (!l.is_zero()).then_some(l)
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;

    fn mul(self, rhs: &CharPoly) -> CharPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CharPoly { coeffs }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

impl IntSquare {
    /// `det(xI − A)` by the Faddeev–LeVerrier recurrence.
    ///
    /// With `M₁ = I` and `Mₖ₊₁ = A·Mₖ + cₙ₋ₖ·I`, each coefficient is
    /// `cₙ₋ₖ = −tr(A·Mₖ)/k`; the division is exact over the integers.
    pub fn char_poly(&self) -> CharPoly {
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let identity = IntSquare::identity(n);
        let mut m = identity.clone();
        for k in 1..=n {
            let am = self.mul(&m).expect("same order");
            let (c, rem) = (-am.trace()).div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs[n - k] = c;
            if k < n {
                m = am.add(&identity.scale(&coeffs[n - k])).expect("same order");
            }
        }
        CharPoly { coeffs }
    }
}

//! Eigenvalues located from the exact characteristic polynomial.
//!
//! Zero roots and integer roots are split off exactly (synthetic division);
//! whatever remains is solved numerically through its companion matrix.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::CharPoly;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenvalue {
    #[serde(serialize_with = "crate::serde_big::float6")]
    pub re: f64,
    #[serde(serialize_with = "crate::serde_big::float6")]
    pub im: f64,
    /// Set when the eigenvalue is an integer verified by exact division.
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub exact: Option<BigInt>,
}

impl Eigenvalue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn exact(k: BigInt) -> Self {
        Self {
            re: k.to_f64().unwrap_or(f64::NAN),
            im: 0.0,
            exact: Some(k),
        }
    }
}

fn numeric_roots(p: &CharPoly) -> Vec<Complex64> {
    let n = p.degree();
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let companion = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    companion.complex_eigenvalues().iter().copied().collect()
}

/// All `n` eigenvalues of a square with characteristic polynomial `p`,
/// exact ones first (descending), then the numeric remainder.
pub fn eigenvalues(p: &CharPoly) -> Vec<Eigenvalue> {
    let mut exact: Vec<BigInt> = vec![BigInt::zero(); p.zero_multiplicity()];
    let mut rest = p.strip_zero_roots();

    let mut candidates: Vec<BigInt> = numeric_roots(&rest)
        .into_iter()
        .filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs()))
        .filter_map(|z| {
            let k = z.re.round();
            ((z.re - k).abs() <= 1e-4 * (1.0 + k.abs())).then(|| BigInt::from(k as i128))
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    for k in candidates {
        while let Some(q) = rest.divide_by_root(&k) {
            rest = q;
            exact.push(k.clone());
        }
    }
    exact.sort_by(|a, b| b.cmp(a));

    let mut numeric = numeric_roots(&rest);
    numeric.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    exact
        .into_iter()
        .map(Eigenvalue::exact)
        .chain(numeric.into_iter().map(|z| Eigenvalue {
            re: z.re,
            im: z.im,
            exact: None,
        }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn exact_values(p: &CharPoly) -> Vec<i64> {
        eigenvalues(p)
            .iter()
            .map(|e| e.exact.as_ref().and_then(ToPrimitive::to_i64).expect("integer root"))
            .collect()
    }

    #[test]
    fn lat4a_integer_spectrum() {
        assert_eq!(exact_values(&catalog::lat4a().char_poly()), vec![10, 0, -2, -4]);
    }

    #[test]
    fn one_ev_spectrum() {
        assert_eq!(exact_values(&catalog::sud4a().char_poly()), vec![10, 0, 0, 0]);
    }

    #[test]
    fn loshu_complex_pair() {
        let ev = eigenvalues(&catalog::loshu().char_poly());
        assert_eq!(ev[0].exact, Some(BigInt::from(15)));
        let root24 = 24f64.sqrt();
        for e in &ev[1..] {
            assert!(e.exact.is_none());
            assert!(e.re.abs() < 1e-9);
            assert!((e.im.abs() - root24).abs() < 1e-9);
        }
    }

    #[test]
    fn loshu_square_double_root() {
        let p = catalog::loshu().pow(2).unwrap().char_poly();
        assert_eq!(exact_values(&p), vec![225, -24, -24]);
    }
}

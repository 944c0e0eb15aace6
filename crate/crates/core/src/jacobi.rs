//! Cyclic Jacobi eigenvalues for small dense symmetric matrices.

use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;
const RELATIVE_THRESHOLD: f64 = 1e-14;

/// Eigenvalues (unsorted) of the symmetric `n × n` row-major matrix `a`.
pub(crate) fn symmetric_eigenvalues(a: &[f64], n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let scale = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    if scale == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let threshold = RELATIVE_THRESHOLD * scale;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i * n + j] * m[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            return Ok((0..n).map(|i| m[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.partial_cmp(a).unwrap());
        v
    }

    #[test]
    fn two_by_two() {
        let ev = sorted(symmetric_eigenvalues(&[2.0, 1.0, 1.0, 2.0], 2).unwrap());
        assert!((ev[0] - 3.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sud4a_gramian() {
        let g = [
            30.0, 22.0, 20.0, 28.0, 22.0, 30.0, 28.0, 20.0, 20.0, 28.0, 30.0, 22.0, 28.0, 20.0,
            22.0, 30.0,
        ];
        let ev = sorted(symmetric_eigenvalues(&g, 4).unwrap());
        for (got, want) in ev.iter().zip([100.0, 16.0, 4.0, 0.0]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn zero_and_diagonal() {
        assert_eq!(symmetric_eigenvalues(&[0.0; 9], 3).unwrap(), vec![0.0; 3]);
        let ev = symmetric_eigenvalues(&[5.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_eq!(ev, vec![5.0, -1.0]);
    }
}

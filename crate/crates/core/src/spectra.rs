//! Spectral summary of a square.
//!
//! Structural quantities (rank, zero multiplicity, the single-eigenvalue test,
//! R-index, Spread) are exact. Floating point appears only in the singular
//! values themselves and in Compression.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::classify::linesum;
use crate::eigen::{eigenvalues, Eigenvalue};
use crate::jacobi::symmetric_eigenvalues;
use crate::{CharPoly, Error, IntSquare, Result};

/// Relative cut-off below which a Gramian eigenvalue counts as zero.
pub const DEFAULT_SV_TOLERANCE: f64 = 1e-12;

pub fn zero_multiplicity(p: &CharPoly) -> usize {
    p.zero_multiplicity()
}

/// True iff `A` is DA with linesum `L ≠ 0` and `det(xI − A) = xⁿ − L·xⁿ⁻¹`.
pub fn is_1ev(a: &IntSquare) -> bool {
    match linesum(a) {
        Some(l) if !l.is_zero() => a.char_poly() == CharPoly::one_ev(a.order(), &l),
        _ => false,
    }
}

/// Characteristic polynomial of `AᵀA`; its roots are the squared singular values.
pub fn sv_squared_charpoly(a: &IntSquare) -> CharPoly {
    a.gramian().char_poly()
}

/// Singular values in descending order.
///
/// Eigenvalues of the Gramian come from cyclic Jacobi rotations; those at or
/// below `tol · λ_max` (and negative round-off) are clamped to zero before
/// taking square roots.
pub fn singular_values(a: &IntSquare, tol: f64) -> Result<Vec<f64>> {
    assert!(tol > 0.0, "tolerance must be positive");
    let g = a.gramian();
    let mut lambdas = symmetric_eigenvalues(&g.to_f64(), a.order())?;
    let max = lambdas.iter().copied().fold(0.0, f64::max);
    for l in lambdas.iter_mut() {
        if *l <= tol * max {
            *l = 0.0;
        }
    }
    let mut svs: Vec<f64> = lambdas.into_iter().map(f64::sqrt).collect();
    svs.sort_by(|x, y| y.total_cmp(x));
    Ok(svs)
}

fn require_nonneg_da(a: &IntSquare) -> Result<BigInt> {
    let l = linesum(a).ok_or(Error::NotDoublyAffine)?;
    if !a.is_nonnegative() {
        return Err(Error::NegativeEntries);
    }
    Ok(l)
}

/// `R = Σ_{i≥2} σᵢ⁴ = trace((AᵀA)²) − L⁴` for nonnegative DA squares, where
/// the leading singular value equals the linesum.
pub fn r_index(a: &IntSquare) -> Result<BigInt> {
    let l = require_nonneg_da(a)?;
    let g = a.gramian();
    let trace_g2: BigInt = g.entries().iter().map(|x| x * x).sum();
    let l2 = &l * &l;
    Ok(trace_g2 - &l2 * &l2)
}

/// Entropy Compression from singular values, of which only the leading
/// `rank` are nonzero: `C = (1 − H/ln n)·100`, `H = −Σ σ̂ ln σ̂`.
pub fn compression_from_svs(svs: &[f64], rank: usize) -> f64 {
    let n = svs.len();
    if rank <= 1 || n <= 1 {
        return 100.0;
    }
    let nonzero = &svs[..rank];
    let total: f64 = nonzero.iter().sum();
    let h: f64 = nonzero
        .iter()
        .map(|s| s / total)
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum();
    (1.0 - h / (n as f64).ln()) * 100.0
}

pub fn compression(a: &IntSquare) -> Result<f64> {
    if a.is_zero() {
        return Err(Error::ZeroSquare);
    }
    let svs = singular_values(a, DEFAULT_SV_TOLERANCE)?;
    Ok(compression_from_svs(&svs, a.rank()))
}

/// `n·(max − min)/L` for a DA square with nonzero linesum.
pub fn spread(a: &IntSquare) -> Result<BigRational> {
    let l = linesum(a).ok_or(Error::NotDoublyAffine)?;
    if l.is_zero() {
        return Err(Error::ZeroLinesum);
    }
    let range = a.max_entry() - a.min_entry();
    Ok(BigRational::new(BigInt::from(a.order()) * range, l))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Row,
    #[default]
    Column,
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" | "rows" => Ok(Axis::Row),
            "column" | "col" | "columns" => Ok(Axis::Column),
            other => Err(Error::Parse(format!("unknown axis `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disk {
    #[serde(serialize_with = "crate::serde_big::int")]
    pub center: BigInt,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub radius: BigInt,
    pub axis: Axis,
}

impl Disk {
    /// Membership with an absolute slack `tol`.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        let c = self.center.to_f64().unwrap_or(f64::NAN);
        let r = self.radius.to_f64().unwrap_or(f64::NAN);
        (z - Complex64::new(c, 0.0)).norm() <= r + tol
    }
}

/// Disk `i` is centred at `a[i][i]` with radius the off-diagonal absolute sum
/// of row `i` or column `i`.
pub fn gerschgorin_disks(a: &IntSquare, axis: Axis) -> Vec<Disk> {
    let n = a.order();
    (0..n)
        .map(|i| {
            let radius = (0..n)
                .filter(|&k| k != i)
                .map(|k| match axis {
                    Axis::Row => a.get(i, k).abs(),
                    Axis::Column => a.get(k, i).abs(),
                })
                .sum();
            Disk {
                center: a.get(i, i).clone(),
                radius,
                axis,
            }
        })
        .collect()
}

pub fn in_disk_union(disks: &[Disk], z: Complex64, tol: f64) -> bool {
    disks.iter().any(|d| d.contains(z, tol))
}

fn serialize_poly<S: Serializer>(p: &CharPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.serialize(s)
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Coeffs<'a>(#[serde(serialize_with = "crate::serde_big::ints")] &'a [BigInt]);
        let mut st = s.serialize_struct("CharPoly", 2)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("coefficients", &Coeffs(self.coeffs()))?;
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralSummary {
    pub rank: usize,
    pub mu: usize,
    pub one_ev: bool,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub linesum: Option<BigInt>,
    #[serde(serialize_with = "serialize_poly")]
    pub char_poly: CharPoly,
    pub eigenvalues: Vec<Eigenvalue>,
    #[serde(serialize_with = "serialize_poly")]
    pub gramian_char_poly: CharPoly,
    #[serde(serialize_with = "crate::serde_big::floats6")]
    pub singular_values: Vec<f64>,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub r_index: Option<BigInt>,
    #[serde(serialize_with = "opt_float6")]
    pub compression_pct: Option<f64>,
    #[serde(serialize_with = "opt_rational")]
    pub spread: Option<BigRational>,
}

fn opt_float6<S: Serializer>(v: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => crate::serde_big::float6(v, s),
        None => s.serialize_none(),
    }
}

fn opt_rational<S: Serializer>(
    v: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => crate::serde_big::rational(v, s),
        None => s.serialize_none(),
    }
}

impl SpectralSummary {
    pub fn of(a: &IntSquare) -> Result<Self> {
        let char_poly = a.char_poly();
        let lsum = linesum(a);
        let one_ev = lsum
            .as_ref()
            .is_some_and(|l| !l.is_zero() && char_poly == CharPoly::one_ev(a.order(), l));
        let rank = a.rank();
        let mut singular_values = singular_values(a, DEFAULT_SV_TOLERANCE)?;
        // The exact rank decides which singular values vanish.
        for s in singular_values.iter_mut().skip(rank) {
            *s = 0.0;
        }
        let compression_pct = (!a.is_zero()).then(|| compression_from_svs(&singular_values, rank));
        Ok(Self {
            rank,
            mu: char_poly.zero_multiplicity(),
            one_ev,
            linesum: lsum,
            eigenvalues: eigenvalues(&char_poly),
            char_poly,
            gramian_char_poly: sv_squared_charpoly(a),
            singular_values,
            r_index: r_index(a).ok(),
            compression_pct,
            spread: spread(a).ok(),
        })
    }
}

/// Renders an exact rational as a decimal when it terminates, else as
/// `p/q (≈ x)` with six significant digits.
pub fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let mut d = q.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut digits = 0usize;
    let mut twos = 0usize;
    let mut fives = 0usize;
    while (&d % &two).is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if d == BigInt::from(1) {
        digits = digits.max(twos).max(fives);
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = q.numer() * &scale / q.denom();
        let neg = scaled.is_negative();
        let text = scaled.abs().to_string();
        let text = format!("{text:0>width$}", width = digits + 1);
        let (int, frac) = text.split_at(text.len() - digits);
        let sign = if neg { "-" } else { "" };
        return format!("{sign}{int}.{frac}");
    }
    let approx = q.to_f64().unwrap_or(f64::NAN);
    format!("{q} (≈ {})", crate::serde_big::format_sig(approx, 6))
}

impl fmt::Display for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.center, self.radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(b(n), b(d))
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn zero_multiplicities() {
        assert_eq!(zero_multiplicity(&CharPoly::one_ev(4, &b(10))), 3);
        assert_eq!(zero_multiplicity(&catalog::f181().char_poly()), 0);
        assert_eq!(zero_multiplicity(&CharPoly::x_pow(5)), 5);
    }

    #[test]
    fn one_ev_detection() {
        assert!(is_1ev(&catalog::sud4a()));
        assert!(!is_1ev(&catalog::lat4a()));
        assert!(is_1ev(&catalog::laa44()));
        assert!(!is_1ev(&IntSquare::zeros(3)));
        // Single nonzero eigenvalue but not DA.
        assert!(!is_1ev(&IntSquare::from_rows(&[[1, 1], [0, 0]]).unwrap()));
    }

    #[test]
    fn gramian_roots() {
        let p = sv_squared_charpoly(&catalog::sud4a());
        assert_eq!(p, CharPoly::from_roots(&[b(100), b(16), b(4), b(0)]));
        let p = sv_squared_charpoly(&catalog::loshu());
        assert_eq!(p, CharPoly::from_roots(&[b(225), b(48), b(12)]));
        let p = sv_squared_charpoly(&IntSquare::ones(4));
        assert_eq!(p, CharPoly::from_roots(&[b(16), b(0), b(0), b(0)]));
    }

    #[test]
    fn singular_value_examples() {
        let tol = DEFAULT_SV_TOLERANCE;
        assert_close(&singular_values(&catalog::sud4a(), tol).unwrap(), &[10.0, 4.0, 2.0, 0.0], 1e-9);
        assert_close(
            &singular_values(&catalog::prime_latin(), tol).unwrap(),
            &[2056.0, 840.0, 420.0, 0.0],
            1e-7,
        );
        let sq: Vec<f64> = singular_values(&catalog::f175(), tol)
            .unwrap()
            .iter()
            .map(|s| s * s)
            .collect();
        assert_close(&sq, &[1156.0, 320.0, 20.0, 0.0], 1e-7);
    }

    #[test]
    fn r_index_examples() {
        assert_eq!(r_index(&catalog::sud4a()).unwrap(), b(272));
        assert_eq!(r_index(&catalog::bf()).unwrap(), b(463_223_040));
        let f360 = catalog::f360();
        assert_eq!(r_index(&f360.pow(2).unwrap()).unwrap(), b(40_960_000));
        assert_eq!(r_index(&f360.pow(3).unwrap()).unwrap(), b(0));
    }

    #[test]
    fn r_index_agrees_with_numeric_singular_values() {
        // Σ_{i≥2} σᵢ⁴ from the floating-point spectrum.
        for a in [catalog::f181(), catalog::f175(), catalog::loshu(), catalog::bf()] {
            let svs = singular_values(&a, DEFAULT_SV_TOLERANCE).unwrap();
            let numeric: f64 = svs[1..].iter().map(|s| s.powi(4)).sum();
            let exact = r_index(&a).unwrap().to_f64().unwrap();
            assert!((numeric - exact).abs() <= 1e-6 * svs[0].powi(4), "{numeric} vs {exact}");
        }
    }

    #[test]
    fn r_index_errors() {
        let not_da = IntSquare::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(r_index(&not_da), Err(Error::NotDoublyAffine));
        let negative = IntSquare::from_rows(&[[-1, 3], [3, -1]]).unwrap();
        assert_eq!(r_index(&negative), Err(Error::NegativeEntries));
    }

    #[test]
    fn compression_examples() {
        assert!((compression(&catalog::sud4a()).unwrap() - 35.0603).abs() < 1e-3);
        assert_eq!(compression(&IntSquare::constant(5, b(7))).unwrap(), 100.0);
        let lat2 = catalog::lat4a().pow(2).unwrap();
        assert!((compression(&lat2).unwrap() - 61.4828).abs() < 1e-3);
        assert_eq!(compression(&IntSquare::zeros(3)), Err(Error::ZeroSquare));
    }

    #[test]
    fn spread_examples() {
        assert_eq!(spread(&catalog::sud4a()).unwrap(), q(6, 5));
        assert_eq!(spread(&IntSquare::constant(3, b(4))).unwrap(), q(0, 1));
        assert_eq!(spread(&catalog::laa44()).unwrap(), q(5 * 24, 65));
        let zero_sum = IntSquare::from_rows(&[[1, -1], [-1, 1]]).unwrap();
        assert_eq!(spread(&zero_sum), Err(Error::ZeroLinesum));
        let not_da = IntSquare::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(spread(&not_da), Err(Error::NotDoublyAffine));
    }

    #[test]
    fn gerschgorin_examples() {
        let disks = gerschgorin_disks(&catalog::sud4a(), Axis::Column);
        let pairs: Vec<(BigInt, BigInt)> =
            disks.iter().map(|d| (d.center.clone(), d.radius.clone())).collect();
        assert_eq!(pairs, vec![(b(1), b(9)), (b(4), b(6)), (b(2), b(8)), (b(3), b(7))]);

        let disks = gerschgorin_disks(&IntSquare::identity(3), Axis::Column);
        assert!(disks.iter().all(|d| d.center == b(1) && d.radius == b(0)));

        // Off-diagonal row sums of the Loshu: 9+2, 3+7, 8+1.
        let disks = gerschgorin_disks(&catalog::loshu(), Axis::Row);
        let pairs: Vec<(BigInt, BigInt)> =
            disks.iter().map(|d| (d.center.clone(), d.radius.clone())).collect();
        assert_eq!(pairs, vec![(b(4), b(11)), (b(5), b(10)), (b(6), b(9))]);
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(render_rational(&q(6, 5)), "1.2");
        assert_eq!(render_rational(&q(4, 25)), "0.16");
        assert_eq!(render_rational(&q(0, 1)), "0");
        assert_eq!(render_rational(&q(-1, 8)), "-0.125");
        assert_eq!(render_rational(&q(24, 13)), "24/13 (≈ 1.84615)");
    }

    #[test]
    fn summary_consistency_over_catalog() {
        for entry in catalog::entries() {
            let s = SpectralSummary::of(&entry.square).unwrap();
            assert_eq!(s.one_ev, entry.expected.one_ev, "{}", entry.name);
            if let Some(r) = entry.expected.r_index {
                assert_eq!(s.r_index, Some(BigInt::from(r)), "{}", entry.name);
            }
            assert!(s.mu + s.rank >= entry.square.order(), "{}", entry.name);
            // Numeric cross-check of the exact rank.
            let raw = singular_values(&entry.square, DEFAULT_SV_TOLERANCE).unwrap();
            let cut = 1e-9 * raw[0];
            assert_eq!(raw.iter().filter(|&&s| s > cut).count(), s.rank, "{}", entry.name);
        }
    }
}

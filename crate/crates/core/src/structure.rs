//! Nilpotent decomposition and the Jordan structure of eigenvalue 0.
//!
//! Block sizes come from exact rank sequences; no Jordan basis is ever formed.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::classify::linesum;
use crate::spectra::is_1ev;
use crate::{Error, IntSquare, RationalSquare, Result};

/// `N = Z − (l/n)·E` for a DA square `Z` with linesum `l`.
pub fn nilpotent_part(z: &IntSquare) -> Result<RationalSquare> {
    let l = linesum(z).ok_or(Error::NotDoublyAffine)?;
    let n = z.order();
    let shift = BigRational::new(l, BigInt::from(n));
    let entries = z
        .entries()
        .iter()
        .map(|x| BigRational::from_integer(x.clone()) - &shift)
        .collect();
    RationalSquare::new(n, entries)
}

/// Smallest `k ≥ 1` with `Nᵏ = 0`.
pub fn nilpotency_index(nil: &RationalSquare) -> Result<usize> {
    // Powers of the integer multiple d·N vanish exactly when those of N do.
    let (_, scaled) = nil.clear_denominators();
    let n = scaled.order();
    let mut power = scaled.clone();
    for k in 1..=n {
        if power.is_zero() {
            return Ok(k);
        }
        if k < n {
            power = power.mul(&scaled)?;
        }
    }
    Err(Error::NotNilpotent)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanZeroProfile {
    /// Descending.
    pub block_sizes: Vec<usize>,
    pub max_block: usize,
    #[serde(skip)]
    pub zero_rank_sequence: Vec<usize>,
}

impl JordanZeroProfile {
    pub fn block_count(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn total(&self) -> usize {
        self.block_sizes.iter().sum()
    }
}

/// Jordan blocks of eigenvalue 0 from `rank(Aᵖ)`, `p = 0, 1, …` until the
/// sequence stabilizes. The number of blocks of size `≥ p` is
/// `rank(Aᵖ⁻¹) − rank(Aᵖ)`; nonzero eigenvalues contribute a constant rank
/// and cancel in the differences.
pub fn zero_jordan_profile(a: &IntSquare) -> JordanZeroProfile {
    let n = a.order();
    let mut ranks = vec![n];
    let mut power = a.clone();
    loop {
        let r = power.rank();
        let prev = *ranks.last().expect("nonempty");
        ranks.push(r);
        if r == prev || ranks.len() > n + 1 {
            break;
        }
        power = power.mul(a).expect("same order");
    }
    // at_least[p - 1] = number of blocks of size ≥ p
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut block_sizes = Vec::new();
    for p in (1..=at_least.len()).rev() {
        let ge_p = at_least[p - 1];
        let ge_next = at_least.get(p).copied().unwrap_or(0);
        block_sizes.extend(std::iter::repeat_n(p, ge_p - ge_next));
    }
    // Drop the repeated stable rank.
    if ranks.len() >= 2 && ranks[ranks.len() - 1] == ranks[ranks.len() - 2] {
        ranks.pop();
    }
    JordanZeroProfile {
        max_block: block_sizes.first().copied().unwrap_or(0),
        block_sizes,
        zero_rank_sequence: ranks,
    }
}

/// The power at which a 1EV square becomes constant: the nilpotency index of
/// its nilpotent part.
pub fn predicted_constancy_power(a: &IntSquare) -> Result<usize> {
    if !is_1ev(a) {
        return Err(Error::NotOneEv);
    }
    nilpotency_index(&nilpotent_part(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn ones_rational(n: usize) -> RationalSquare {
        RationalSquare::from(&IntSquare::ones(n))
    }

    #[test]
    fn sud4a_nilpotent_part() {
        let nil = nilpotent_part(&catalog::sud4a()).unwrap();
        let half = BigRational::new(BigInt::from(5), BigInt::from(2));
        assert_eq!(nil.get(0, 0), &(BigRational::from_integer(BigInt::from(1)) - &half));
        assert!(nil.row_sums().iter().all(Zero::is_zero));
        assert!(nil.col_sums().iter().all(Zero::is_zero));
        assert_eq!(nilpotency_index(&nil).unwrap(), 3);
    }

    #[test]
    fn constant_square_has_zero_part() {
        let nil = nilpotent_part(&IntSquare::constant(4, BigInt::from(7))).unwrap();
        assert!(nil.is_zero());
        assert_eq!(nilpotency_index(&nil).unwrap(), 1);
    }

    #[test]
    fn f360_shift() {
        let nil = nilpotent_part(&catalog::f360()).unwrap();
        let want = BigRational::new(BigInt::from(2 * 2 - 17), BigInt::from(2));
        assert_eq!(nil.get(0, 0), &want);
    }

    #[test]
    fn non_da_rejected() {
        let a = IntSquare::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(nilpotent_part(&a), Err(Error::NotDoublyAffine));
    }

    #[test]
    fn lat4a_part_is_not_nilpotent() {
        let nil = nilpotent_part(&catalog::lat4a()).unwrap();
        assert_eq!(nilpotency_index(&nil), Err(Error::NotNilpotent));
        assert_eq!(predicted_constancy_power(&catalog::lat4a()), Err(Error::NotOneEv));
    }

    #[test]
    fn laa44_index() {
        let nil = nilpotent_part(&catalog::laa44()).unwrap();
        assert_eq!(nilpotency_index(&nil).unwrap(), 4);
    }

    #[test]
    fn sud4a_profile() {
        let p = zero_jordan_profile(&catalog::sud4a());
        assert_eq!(p.block_sizes, vec![3]);
        assert_eq!(p.max_block, 3);
        assert_eq!(p.zero_rank_sequence, vec![4, 3, 2, 1]);
    }

    #[test]
    fn nonsingular_profile_is_empty() {
        let p = zero_jordan_profile(&catalog::f181());
        assert!(p.block_sizes.is_empty());
        assert_eq!(p.max_block, 0);
        assert_eq!(p.zero_rank_sequence, vec![4]);
    }

    #[test]
    fn zero_square_profile() {
        let p = zero_jordan_profile(&IntSquare::zeros(3));
        assert_eq!(p.block_sizes, vec![1, 1, 1]);
    }

    #[test]
    fn nilpotent_shift_block() {
        let j = IntSquare::from_rows(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]).unwrap();
        assert_eq!(zero_jordan_profile(&j).block_sizes, vec![3]);
    }

    #[test]
    fn predicted_powers() {
        assert_eq!(predicted_constancy_power(&catalog::sud4a()).unwrap(), 3);
        assert_eq!(predicted_constancy_power(&catalog::laa44()).unwrap(), 4);
        assert_eq!(predicted_constancy_power(&catalog::bf()).unwrap(), 3);
    }

    #[test]
    fn serialized_shape() {
        let p = zero_jordan_profile(&catalog::sud4a());
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"block_sizes":[3],"max_block":3}"#
        );
    }

    #[test]
    fn one_ev_catalog_identities() {
        for entry in catalog::entries().into_iter().filter(|e| e.expected.one_ev) {
            let a = &entry.square;
            let n = a.order();
            let nil = nilpotent_part(a).unwrap();
            let e = ones_rational(n);
            assert!(nil.mul(&e).unwrap().is_zero(), "{}", entry.name);
            assert!(e.mul(&nil).unwrap().is_zero(), "{}", entry.name);

            let profile = zero_jordan_profile(a);
            assert_eq!(profile.total(), a.char_poly().zero_multiplicity(), "{}", entry.name);
            assert_eq!(
                profile.max_block,
                nilpotency_index(&nil).unwrap(),
                "{}",
                entry.name
            );

            let l = linesum(a).unwrap();
            let an = a.pow(n as u32).unwrap();
            let an1 = a.pow(n as u32 - 1).unwrap();
            assert_eq!(an, an1.scale(&l), "{}", entry.name);

            let k = predicted_constancy_power(a).unwrap();
            assert!(a.pow(k as u32).unwrap().is_constant().is_some(), "{}", entry.name);
            if k >= 2 {
                assert!(a.pow(k as u32 - 1).unwrap().is_constant().is_none(), "{}", entry.name);
            }
        }
    }

    #[test]
    fn ones_powers() {
        let e = IntSquare::ones(4);
        for k in 1..5u32 {
            let want = e.scale(&BigInt::from(4u32.pow(k - 1)));
            assert_eq!(e.pow(k).unwrap(), want);
        }
    }

    proptest! {
        #[test]
        fn profile_accounts_for_zero_multiplicity(
            cells in proptest::collection::vec(-3i64..4, 9)
        ) {
            let a = IntSquare::new(3, cells.into_iter().map(BigInt::from).collect()).unwrap();
            let profile = zero_jordan_profile(&a);
            prop_assert_eq!(profile.total(), a.char_poly().zero_multiplicity());
        }

        #[test]
        fn conjugated_one_ev_keeps_its_index(
            perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(),
            a in 1i64..5,
            b in 0i64..5
        ) {
            // P·(a·Z + b·E)·Pᵀ stays DA and 1EV with the same nilpotent index.
            let z = catalog::laa44();
            let src = z.scale(&BigInt::from(a)).shift(&BigInt::from(b));
            let c = IntSquare::from_fn(5, |i, j| src.get(perm[i], perm[j]).clone());
            prop_assert!(is_1ev(&c));
            prop_assert_eq!(predicted_constancy_power(&c).unwrap(), 4);
            prop_assert_eq!(zero_jordan_profile(&c).block_sizes, vec![4]);
        }
    }
}

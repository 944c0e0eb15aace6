//! The eight rotations/reflections of a square and Frenicle standard form.
//!
//! Phase `k` is the transpose (when `k ≥ 4`) followed by `k mod 4` quarter
//! turns clockwise. Phase 0 is the identity.

use crate::{Error, IntSquare, Result};

/// Number of symmetry phases of a square.
pub const PHASES: usize = 8;

/// Where entry `(i, j)` of the image comes from, for phase `phase`.
#[inline]
pub(crate) fn source_index(n: usize, phase: usize, i: usize, j: usize) -> (usize, usize) {
    // Undo the quarter turns first: a clockwise turn maps (r, c) -> (c, n-1-r).
    let (mut r, mut c) = (i, j);
    for _ in 0..phase % 4 {
        (r, c) = (n - 1 - c, r);
    }
    if phase >= 4 {
        (r, c) = (c, r);
    }
    (r, c)
}

pub fn apply_phase(a: &IntSquare, phase: usize) -> IntSquare {
    assert!(phase < PHASES, "phase must be in 0..8");
    let n = a.order();
    IntSquare::from_fn(n, |i, j| {
        let (r, c) = source_index(n, phase, i, j);
        a.get(r, c).clone()
    })
}

pub fn rotate90(a: &IntSquare) -> IntSquare {
    apply_phase(a, 1)
}

/// All eight images, indexed by phase.
pub fn all_phases(a: &IntSquare) -> Vec<IntSquare> {
    (0..PHASES).map(|p| apply_phase(a, p)).collect()
}

/// Frenicle standard form of an order-4 square: the symmetry image whose
/// top-left entry is the smallest corner and whose `a[0][1] < a[1][0]`.
///
/// Returns the canonical square and the phase that produced it.
pub fn frenicle_canonical(a: &IntSquare) -> Result<(IntSquare, usize)> {
    if a.order() != 4 {
        return Err(Error::NotOrderFour(a.order()));
    }
    let mut found = None;
    for phase in 0..PHASES {
        let img = apply_phase(a, phase);
        let corner_min = [img.get(0, 3), img.get(3, 0), img.get(3, 3)]
            .into_iter()
            .all(|c| img.get(0, 0) < c);
        if corner_min && img.get(0, 1) < img.get(1, 0) {
            if found.is_some() {
                return Err(Error::FrenicleTie);
            }
            found = Some((img, phase));
        }
    }
    found.ok_or(Error::FrenicleTie)
}

/// Fast Frenicle form for order-4 squares stored as 16 bytes (used by the census).
pub(crate) fn frenicle_canonical_u8(a: &[u8; 16]) -> [u8; 16] {
    let mut best: Option<[u8; 16]> = None;
    for phase in 0..PHASES {
        let mut img = [0u8; 16];
        for i in 0..4 {
            for j in 0..4 {
                let (r, c) = source_index(4, phase, i, j);
                img[i * 4 + j] = a[r * 4 + c];
            }
        }
        let top_left = img[0];
        if top_left < img[3] && top_left < img[12] && top_left < img[15] && img[1] < img[4] {
            debug_assert!(best.is_none());
            best = Some(img);
        }
    }
    best.expect("squares with distinct entries have a unique Frenicle form")
}

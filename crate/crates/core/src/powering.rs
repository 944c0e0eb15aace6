//! Matrix-power trajectories.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::classify::{classify, TypeLabel};
use crate::spectra::{compression, r_index, spread};
use crate::{IntSquare, Result};

pub const DEFAULT_MAX_P: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerStepRecord {
    pub p: usize,
    pub rank: usize,
    pub type_label: TypeLabel,
    /// Table vocabulary: `magic`/`Latin`/`diagonal Latin` for classic bases at `p = 1`, else the type label.
    pub type_text: String,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub d1: BigInt,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub d2: BigInt,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub linesum: Option<BigInt>,
    #[serde(serialize_with = "opt_float6")]
    pub compression_pct: Option<f64>,
    #[serde(serialize_with = "opt_rational")]
    pub spread: Option<BigRational>,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub r_index: Option<BigInt>,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub constant_value: Option<BigInt>,
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

impl PowerStepRecord {
    pub fn of(power: &IntSquare, p: usize) -> Result<Self> {
        let flags = classify(power);
        let type_text = if p == 1 && flags.is_classic_magic {
            "magic".to_string()
        } else if p == 1 && flags.is_classic_latin && flags.is_diagonal_latin {
            "diagonal Latin".to_string()
        } else if p == 1 && flags.is_classic_latin {
            "Latin".to_string()
        } else {
            flags.type_label.to_string()
        };
        let compression_pct = if power.is_zero() {
            None
        } else {
            Some(compression(power)?)
        };
        Ok(Self {
            p,
            rank: power.rank(),
            type_label: flags.type_label,
            type_text,
            d1: flags.d1,
            d2: flags.d2,
            linesum: flags.linesum,
            compression_pct,
            spread: spread(power).ok(),
            r_index: r_index(power).ok(),
            constant_value: power.is_constant(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerTrajectory {
    pub base: IntSquare,
    pub steps: Vec<PowerStepRecord>,
    pub constancy_onset: Option<usize>,
    /// The cap, when it was reached without constancy.
    pub truncated_at: Option<usize>,
}

/// Serialized as the array of step records.
impl Serialize for PowerTrajectory {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.steps.len()))?;
        for step in &self.steps {
            seq.serialize_element(step)?;
        }
        seq.end()
    }
}

/// Step records for `p = 1..=max_p`, stopping at the first constant power.
pub fn trajectory(a: &IntSquare, max_p: usize) -> Result<PowerTrajectory> {
    assert!(max_p >= 1, "max_p must be at least 1");
    let mut steps = Vec::new();
    let mut constancy = None;
    for (idx, power) in a.powers().take(max_p).enumerate() {
        let step = PowerStepRecord::of(&power, idx + 1)?;
        let constant = step.constant_value.is_some();
        steps.push(step);
        if constant {
            constancy = Some(idx + 1);
            break;
        }
    }
    Ok(PowerTrajectory {
        base: a.clone(),
        truncated_at: constancy.is_none().then_some(max_p),
        steps,
        constancy_onset: constancy,
    })
}

/// Smallest `p ≤ max_p` with `Aᵖ` constant.
pub fn constancy_onset(a: &IntSquare, max_p: usize) -> Option<usize> {
    a.powers()
        .take(max_p)
        .position(|m| m.is_constant().is_some())
        .map(|i| i + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CbhVerdict {
    /// Odd powers DDA, even powers DA but not DDA.
    Alternates,
    AllDda,
    ConstantAt { p: usize, all_prior_dda: bool },
    Other,
}

pub fn cbh_alternation_check(t: &PowerTrajectory) -> CbhVerdict {
    if let Some(p) = t.constancy_onset {
        let all_prior_dda = t.steps[..p - 1]
            .iter()
            .all(|s| s.type_label == TypeLabel::DDA);
        return CbhVerdict::ConstantAt { p, all_prior_dda };
    }
    if t.steps.iter().all(|s| s.type_label == TypeLabel::DDA) {
        return CbhVerdict::AllDda;
    }
    let alternates = t.steps.iter().all(|s| {
        let want = if s.p % 2 == 1 { TypeLabel::DDA } else { TypeLabel::DA };
        s.type_label == want
    });
    if alternates {
        CbhVerdict::Alternates
    } else {
        CbhVerdict::Other
    }
}

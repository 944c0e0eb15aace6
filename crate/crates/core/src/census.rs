//! Exhaustive census of the order-4 classic magic squares.
//!
//! A backtracking search over the entries `1..=16` fixes cells in an order
//! where most cells are forced by a line sum. The 7040 raw solutions reduce
//! to 880 Frenicle forms, indexed 1..=880 in lexicographic row-major order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::classify;
use crate::spectra::{is_1ev, r_index};
use crate::symmetry::{all_phases, frenicle_canonical_u8};
use crate::{CharPoly, Error, IntSquare, Result};

const SUM: u8 = 34;

#[derive(Clone, Copy)]
enum Step {
    Free(usize),
    /// Cell completes the line through the three given cells.
    Forced(usize, [usize; 3]),
}

const fn cell(r: usize, c: usize) -> usize {
    r * 4 + c
}

/// Fill order after `a00`; every line is checked or forced by the end.
const PLAN: [Step; 15] = [
    Step::Free(cell(0, 1)),
    Step::Free(cell(0, 2)),
    Step::Forced(cell(0, 3), [cell(0, 0), cell(0, 1), cell(0, 2)]),
    Step::Free(cell(1, 1)),
    Step::Free(cell(2, 2)),
    Step::Forced(cell(3, 3), [cell(0, 0), cell(1, 1), cell(2, 2)]),
    Step::Free(cell(1, 2)),
    Step::Free(cell(2, 1)),
    Step::Forced(cell(3, 0), [cell(0, 3), cell(1, 2), cell(2, 1)]),
    Step::Free(cell(1, 0)),
    Step::Forced(cell(1, 3), [cell(1, 0), cell(1, 1), cell(1, 2)]),
    Step::Forced(cell(2, 0), [cell(0, 0), cell(1, 0), cell(3, 0)]),
    Step::Forced(cell(2, 3), [cell(2, 0), cell(2, 1), cell(2, 2)]),
    Step::Forced(cell(3, 1), [cell(0, 1), cell(1, 1), cell(2, 1)]),
    Step::Forced(cell(3, 2), [cell(0, 2), cell(1, 2), cell(2, 2)]),
];

fn line_ok(a: &[u8; 16], cells: [usize; 4]) -> bool {
    cells.iter().map(|&c| a[c]).sum::<u8>() == SUM
}

fn search(a: &mut [u8; 16], used: u32, step: usize, out: &mut Vec<[u8; 16]>) {
    if step == PLAN.len() {
        if line_ok(a, [cell(0, 3), cell(1, 3), cell(2, 3), cell(3, 3)])
            && line_ok(a, [cell(3, 0), cell(3, 1), cell(3, 2), cell(3, 3)])
        {
            out.push(*a);
        }
        return;
    }
    match PLAN[step] {
        Step::Free(c) => {
            for v in 1..=16u8 {
                if used & (1 << v) == 0 {
                    a[c] = v;
                    search(a, used | (1 << v), step + 1, out);
                }
            }
        }
        Step::Forced(c, [x, y, z]) => {
            let partial = a[x] + a[y] + a[z];
            if partial >= SUM || SUM - partial > 16 {
                return;
            }
            let v = SUM - partial;
            if used & (1 << v) == 0 {
                a[c] = v;
                search(a, used | (1 << v), step + 1, out);
            }
        }
    }
}

/// Every order-4 square on `1..=16` with all ten line sums equal to 34.
pub fn raw_solutions() -> Vec<[u8; 16]> {
    let mut all: Vec<[u8; 16]> = (1..=16u8)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut a = [0u8; 16];
            a[0] = first;
            let mut out = Vec::new();
            search(&mut a, 1 << first, 0, &mut out);
            out
        })
        .collect();
    all.sort_unstable();
    all
}

fn to_square(a: &[u8; 16]) -> IntSquare {
    IntSquare::new(4, a.iter().map(|&x| BigInt::from(x)).collect()).expect("16 cells")
}

#[derive(Clone, Debug, Serialize)]
pub struct Member {
    pub index: usize,
    #[serde(skip)]
    pub square: IntSquare,
    pub associative: bool,
    pub pandiagonal: bool,
    /// Multiplicity of eigenvalue 0.
    pub mu: usize,
    pub one_ev: bool,
    /// How many of the eight phases are 1EV.
    pub one_ev_phases: usize,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub r_index: BigInt,
    #[serde(skip)]
    pub gramian_poly: CharPoly,
    pub clan: usize,
}

#[derive(Clone, Debug)]
pub struct Clan {
    pub id: usize,
    /// Characteristic polynomial of the Gramian.
    pub key: CharPoly,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneEvEntry {
    pub index: usize,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub r_index: BigInt,
    pub clan: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub name: &'static str,
    pub printed: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Calibration {
    pub anchors: Vec<Anchor>,
}

impl Calibration {
    pub fn ok(&self) -> bool {
        self.anchors.iter().all(|a| a.printed == a.found)
    }
}

pub struct Census {
    raw_count: usize,
    canonical: Vec<[u8; 16]>,
    index_of: HashMap<[u8; 16], usize>,
    members: Vec<Member>,
    clans: Vec<Clan>,
}

impl Census {
    pub fn build() -> Self {
        let raw = raw_solutions();
        let canonical: Vec<[u8; 16]> = raw
            .iter()
            .map(frenicle_canonical_u8)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index_of = canonical
            .iter()
            .enumerate()
            .map(|(i, a)| (*a, i + 1))
            .collect();

        let mut members: Vec<Member> = canonical
            .par_iter()
            .enumerate()
            .map(|(i, a)| {
                let square = to_square(a);
                let flags = classify(&square);
                let one_ev_phases = all_phases(&square).iter().filter(|s| is_1ev(s)).count();
                Member {
                    index: i + 1,
                    associative: flags.is_associative,
                    pandiagonal: flags.is_pandiagonal,
                    mu: square.char_poly().zero_multiplicity(),
                    one_ev: is_1ev(&square),
                    one_ev_phases,
                    r_index: r_index(&square).expect("nonnegative magic square"),
                    gramian_poly: square.gramian().char_poly(),
                    clan: 0,
                    square,
                }
            })
            .collect();

        let clans = partition(members.iter().map(|m| (m.index, &m.gramian_poly)));
        for clan in &clans {
            for &i in &clan.members {
                members[i - 1].clan = clan.id;
            }
        }
        Self {
            raw_count: raw.len(),
            canonical,
            index_of,
            members,
            clans,
        }
    }

    /// Process-wide census, built on first use.
    pub fn shared() -> &'static Census {
        static CENSUS: OnceLock<Census> = OnceLock::new();
        CENSUS.get_or_init(Census::build)
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn raw_count(&self) -> usize {
        self.raw_count
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member(&self, index: usize) -> Result<&Member> {
        index
            .checked_sub(1)
            .and_then(|i| self.members.get(i))
            .ok_or(Error::IndexOutOfRange(index))
    }

    pub fn square(&self, index: usize) -> Result<&IntSquare> {
        self.member(index).map(|m| &m.square)
    }

    pub fn frenicle_index(&self, a: &IntSquare) -> Result<usize> {
        if a.order() != 4 {
            return Err(Error::NotOrderFour(a.order()));
        }
        if !classify(a).is_classic_magic {
            return Err(Error::NotClassicMagic4);
        }
        let mut bytes = [0u8; 16];
        for (b, x) in bytes.iter_mut().zip(a.entries()) {
            *b = u8::try_from(x).map_err(|_| Error::NotClassicMagic4)?;
        }
        self.index_of
            .get(&frenicle_canonical_u8(&bytes))
            .copied()
            .ok_or(Error::NotClassicMagic4)
    }

    /// Clans of the full census, numbered by their smallest member.
    pub fn clans(&self) -> &[Clan] {
        &self.clans
    }

    /// Clans restricted to the members for which `keep` holds.
    pub fn clan_partition(&self, keep: impl Fn(&Member) -> bool) -> Vec<Clan> {
        let mut out: Vec<Clan> = self
            .clans
            .iter()
            .filter_map(|c| {
                let members: Vec<usize> = c
                    .members
                    .iter()
                    .copied()
                    .filter(|&i| keep(&self.members[i - 1]))
                    .collect();
                (!members.is_empty()).then(|| Clan {
                    id: c.id,
                    key: c.key.clone(),
                    members,
                })
            })
            .collect();
        out.sort_by_key(|c| c.members[0]);
        out
    }

    pub fn onev_census(&self, associative_only: bool) -> Vec<OneEvEntry> {
        self.members
            .iter()
            .filter(|m| m.one_ev && (!associative_only || m.associative))
            .map(|m| OneEvEntry {
                index: m.index,
                r_index: m.r_index.clone(),
                clan: m.clan,
            })
            .collect()
    }

    /// Where the squares printed with a Frenicle index land in this census.
    pub fn calibration(&self) -> Calibration {
        use crate::catalog;
        let anchors = [
            ("f360", 360, catalog::f360()),
            ("f299", 299, catalog::f299()),
            ("f175", 175, catalog::f175()),
            ("f181", 181, catalog::f181()),
        ]
        .into_iter()
        .map(|(name, printed, sq)| Anchor {
            name,
            printed,
            found: self.frenicle_index(&sq).unwrap_or(0),
        })
        .collect();
        Calibration { anchors }
    }
}

fn partition<'a>(items: impl Iterator<Item = (usize, &'a CharPoly)>) -> Vec<Clan> {
    let mut groups: BTreeMap<usize, (CharPoly, Vec<usize>)> = BTreeMap::new();
    let mut first_of: HashMap<&CharPoly, usize> = HashMap::new();
    for (index, key) in items {
        let first = *first_of.entry(key).or_insert(index);
        groups
            .entry(first)
            .or_insert_with(|| (key.clone(), Vec::new()))
            .1
            .push(index);
    }
    groups
        .into_values()
        .enumerate()
        .map(|(i, (key, members))| Clan {
            id: i + 1,
            key,
            members,
        })
        .collect()
}

/// Squared singular values of the three associative clans, largest first.
pub const ASSOCIATIVE_CLANS: [(&str, [i64; 3]); 3] = [
    ("alpha", [1156, 320, 20]),
    ("beta", [1156, 272, 68]),
    ("gamma", [1156, 260, 80]),
];

/// Greek name of a Gramian polynomial `x·(x − s₁)(x − s₂)(x − s₃)` when it
/// matches one of the associative clans.
pub fn associative_clan_name(key: &CharPoly) -> Option<&'static str> {
    ASSOCIATIVE_CLANS.iter().find_map(|(name, roots)| {
        let mut all: Vec<BigInt> = roots.iter().map(|&r| BigInt::from(r)).collect();
        all.push(BigInt::from(0));
        (&CharPoly::from_roots(&all) == key).then_some(*name)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::powering::constancy_onset;
    use crate::structure::predicted_constancy_power;
    use crate::symmetry::apply_phase;
    use proptest::prelude::*;

    fn census() -> &'static Census {
        Census::shared()
    }

    #[test]
    fn counts() {
        let c = census();
        assert_eq!(c.raw_count(), 7040);
        assert_eq!(c.len(), 880);
        assert_eq!(c.raw_count(), 8 * c.len());
        assert_eq!(c.members().iter().filter(|m| m.associative).count(), 48);
        assert_eq!(c.clans().len(), 63);
    }

    #[test]
    fn sorted_and_magic() {
        let c = census();
        assert!(c.canonical.windows(2).all(|w| w[0] < w[1]));
        for m in c.members() {
            let f = classify(&m.square);
            assert!(f.is_classic_magic, "f{}", m.index);
            assert_eq!(f.linesum, Some(BigInt::from(34)));
        }
    }

    #[test]
    fn anchors_calibrate() {
        let cal = census().calibration();
        assert!(cal.ok(), "{cal:?}");
    }

    #[test]
    fn index_errors() {
        let c = census();
        assert_eq!(c.square(0), Err(Error::IndexOutOfRange(0)));
        assert_eq!(c.square(881), Err(Error::IndexOutOfRange(881)));
        assert_eq!(c.frenicle_index(&catalog::loshu()), Err(Error::NotOrderFour(3)));
        assert_eq!(c.frenicle_index(&catalog::sud4a()), Err(Error::NotClassicMagic4));
        assert_eq!(c.frenicle_index(&catalog::freitag()), Err(Error::NotClassicMagic4));
    }

    #[test]
    fn associative_clans() {
        let c = census();
        let clans = c.clan_partition(|m| m.associative);
        assert_eq!(clans.len(), 3);
        let names: Vec<_> = clans.iter().map(|k| associative_clan_name(&k.key)).collect();
        assert_eq!(names, vec![Some("alpha"), Some("beta"), Some("gamma")]);
        assert!(clans.iter().all(|k| k.members.len() == 16));
        let not_one_ev = c.members().iter().filter(|m| m.associative && !m.one_ev).count();
        assert_eq!(not_one_ev, 40);
        assert!(!c.member(99).unwrap().associative);
        assert!(c.member(299).unwrap().associative);
    }

    #[test]
    fn associative_one_ev_members() {
        let c = census();
        let found = c.onev_census(true);
        let alpha: Vec<usize> = found
            .iter()
            .filter(|e| e.r_index == BigInt::from(102_800))
            .map(|e| e.index)
            .collect();
        let beta: Vec<usize> = found
            .iter()
            .filter(|e| e.r_index == BigInt::from(78_608))
            .map(|e| e.index)
            .collect();
        assert_eq!(found.len(), 8);
        assert_eq!(alpha, vec![290, 360, 790, 803]);
        assert_eq!(beta, vec![299, 377, 489, 535]);
    }

    #[test]
    fn one_ev_members_become_constant_at_their_index() {
        for e in census().onev_census(false) {
            let a = census().square(e.index).unwrap();
            let k = predicted_constancy_power(a).unwrap();
            assert_eq!(constancy_onset(a, 12), Some(k), "f{}", e.index);
            assert_eq!(k, 3, "f{}", e.index);
        }
    }

    #[test]
    fn phase_patterns() {
        for m in census().members() {
            assert!([0, 4, 8].contains(&m.one_ev_phases), "f{}", m.index);
            assert!(!m.one_ev || m.one_ev_phases > 0, "f{}", m.index);
        }
    }

    #[test]
    fn every_member_satisfies_cayley_hamilton() {
        for m in census().members() {
            let p = m.square.char_poly();
            assert!(p.eval_matrix(&m.square).unwrap().is_zero(), "f{}", m.index);
            assert!(p.eval(&BigInt::from(34)) == BigInt::from(0), "f{}", m.index);
        }
    }

    proptest! {
        #[test]
        fn symmetry_images_share_index_and_r(index in 1usize..=880, phase in 0usize..8) {
            let c = census();
            let m = c.member(index).unwrap();
            let img = apply_phase(&m.square, phase);
            prop_assert_eq!(c.frenicle_index(&img).unwrap(), index);
            prop_assert_eq!(r_index(&img).unwrap(), m.r_index.clone());
        }
    }
}

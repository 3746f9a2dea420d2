use std::collections::BTreeSet;
use std::fmt;

use crate::faces::IndexSet;
use crate::hemispace::{FacePartition, PartSide};

use super::partitions::{enumerate_centered_hyperplanes, enumerate_face_partitions};

/// Case and subcase of an origin-side partition in `R^3_max`, read off the
/// complement side: how many 2-codimensional faces it holds, then how the
/// 1-codimensional faces are arranged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CensusCase {
    /// Every 2- and 1-codimensional face lies with the origin.
    Case1Sub1,
    /// Every 2-codimensional face lies with the origin, one 1-codimensional
    /// face does not.
    Case1Sub2,
    /// One 2-codimensional face `T` lies in the complement, together with
    /// every 1-codimensional face inside `T`.
    Case2Sub1,
    /// One 2-codimensional face `T` lies in the complement, and exactly one
    /// 1-codimensional face inside `T` lies with the origin.
    Case2Sub2,
}

impl CensusCase {
    pub const ALL: [CensusCase; 4] = [
        CensusCase::Case1Sub1,
        CensusCase::Case1Sub2,
        CensusCase::Case2Sub1,
        CensusCase::Case2Sub2,
    ];
}

impl fmt::Display for CensusCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (case, sub) = match self {
            CensusCase::Case1Sub1 => (1, 1),
            CensusCase::Case1Sub2 => (1, 2),
            CensusCase::Case2Sub1 => (2, 1),
            CensusCase::Case2Sub2 => (2, 2),
        };
        write!(f, "case {case}, subcase {sub}")
    }
}

/// Hemispace tallies per case, each counting an origin-side hemispace and its
/// complement. The whole space and the empty set fall in case 1, subcase 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusTally {
    pub case1_sub1: usize,
    pub case1_sub2: usize,
    pub case2_sub1: usize,
    pub case2_sub2: usize,
    /// Proper origin-side partitions that fit no case.
    pub unclassified: usize,
}

impl CensusTally {
    pub fn case1(&self) -> usize {
        self.case1_sub1 + self.case1_sub2
    }

    pub fn case2(&self) -> usize {
        self.case2_sub1 + self.case2_sub2
    }

    pub fn total(&self) -> usize {
        self.case1() + self.case2()
    }

    fn bump(&mut self, case: CensusCase) {
        let slot = match case {
            CensusCase::Case1Sub1 => &mut self.case1_sub1,
            CensusCase::Case1Sub2 => &mut self.case1_sub2,
            CensusCase::Case2Sub1 => &mut self.case2_sub1,
            CensusCase::Case2Sub2 => &mut self.case2_sub2,
        };
        *slot += 2;
    }
}

/// Sets of the given size on the side not holding `universe`.
fn complement_sets(
    part: &FacePartition,
    origin: PartSide,
    size: usize,
) -> BTreeSet<IndexSet> {
    part.get(origin.flip())
        .iter()
        .copied()
        .filter(|s| s.len() == size)
        .collect()
}

/// Classifies a partition of the faces of a hyperplane in `R^3_max` by the
/// side opposite the origin. Returns `None` when the universe has other than
/// four indices or the complement side breaks the pattern of every case.
pub fn classify_origin_side(universe: IndexSet, part: &FacePartition) -> Option<CensusCase> {
    if universe.len() != 4 {
        return None;
    }
    let origin = part.side_of(universe)?;
    let triples = complement_sets(part, origin, 3);
    let pairs = complement_sets(part, origin, 2);
    let singles = complement_sets(part, origin, 1);
    match triples.len() {
        0 => match pairs.len() {
            0 => (singles.len() <= 1).then_some(CensusCase::Case1Sub1),
            1 => {
                let p = *pairs.iter().next()?;
                let fits = !singles.is_empty() && singles.iter().all(|s| s.is_subset(p));
                fits.then_some(CensusCase::Case1Sub2)
            }
            _ => None,
        },
        1 => {
            let t = *triples.iter().next()?;
            if pairs.iter().any(|p| !p.is_subset(t)) || singles.iter().any(|s| !s.is_subset(t)) {
                return None;
            }
            match pairs.len() {
                3 => Some(CensusCase::Case2Sub1),
                2 => Some(CensusCase::Case2Sub2),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Classifies the proper origin-side partitions of every centered hyperplane
/// in `R^3_max`, counting each with its complement, and adds the pair made of
/// the whole space and the empty set to case 1, subcase 1.
pub fn census_n3() -> CensusTally {
    let mut tally = CensusTally::default();
    for h in enumerate_centered_hyperplanes(3) {
        let parts = enumerate_face_partitions(&h).expect("centered hyperplanes have no extra faces");
        for part in parts {
            match classify_origin_side(h.universe(), &part) {
                Some(case) => tally.bump(case),
                None => tally.unclassified += 1,
            }
        }
    }
    tally.bump(CensusCase::Case1Sub1);
    tally
}

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::faces::{ExtIndex, Hyperplane, IndexSet};

/// One of the two collections of a [`FacePartition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartSide {
    First,
    Second,
}

impl PartSide {
    pub fn flip(self) -> Self {
        match self {
            PartSide::First => PartSide::Second,
            PartSide::Second => PartSide::First,
        }
    }

    fn number(self) -> u8 {
        match self {
            PartSide::First => 1,
            PartSide::Second => 2,
        }
    }
}

/// A split of the k-face index sets of a hyperplane into two collections,
/// each closed under union, with the singletons of `I` on one side and the
/// singletons of `J̄` on the other. One side may be empty (the pair made of
/// the empty set and the whole space).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacePartition {
    first: BTreeSet<IndexSet>,
    second: BTreeSet<IndexSet>,
}

impl FacePartition {
    pub fn first(&self) -> &BTreeSet<IndexSet> {
        &self.first
    }

    pub fn second(&self) -> &BTreeSet<IndexSet> {
        &self.second
    }

    pub fn get(&self, side: PartSide) -> &BTreeSet<IndexSet> {
        match side {
            PartSide::First => &self.first,
            PartSide::Second => &self.second,
        }
    }

    pub fn side_of(&self, set: IndexSet) -> Option<PartSide> {
        if self.first.contains(&set) {
            Some(PartSide::First)
        } else if self.second.contains(&set) {
            Some(PartSide::Second)
        } else {
            None
        }
    }

    /// Whether one side is empty.
    pub fn is_trivial(&self) -> bool {
        self.first.is_empty() || self.second.is_empty()
    }

    pub fn swapped(&self) -> Self {
        FacePartition {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Everything on the first side.
    pub fn all_first(h: &Hyperplane) -> Self {
        FacePartition {
            first: h.universe().nonempty_subsets().into_iter().collect(),
            second: BTreeSet::new(),
        }
    }
}

/// Checks that `first`/`second` split the k-faces of `h` into union-closed
/// collections with `P(I)` and `P(J̄)` on opposite sides.
///
/// Errors name the first offending set, the first pair `S, T` (in canonical
/// order) whose union lands on the other side, or a singleton on the wrong
/// side, checked in that order.
pub fn validate_partition(
    h: &Hyperplane,
    first: &[IndexSet],
    second: &[IndexSet],
) -> Result<FacePartition> {
    let universe = h.universe();
    let mut sides = [BTreeSet::new(), BTreeSet::new()];
    for (side, sets) in [first, second].into_iter().enumerate() {
        for &s in sets {
            if s.is_empty() || !s.is_subset(universe) {
                return Err(Error::NotAPartition(format!(
                    "{s} is not a k-face index set of {h}"
                )));
            }
            if sides[0].contains(&s) || !sides[side].insert(s) {
                return Err(Error::NotAPartition(format!("{s} listed twice")));
            }
        }
    }
    if let Some(missing) = universe
        .nonempty_subsets()
        .into_iter()
        .find(|s| !sides[0].contains(s) && !sides[1].contains(s))
    {
        return Err(Error::NotAPartition(format!("{missing} is not assigned")));
    }
    let [first, second] = sides;
    let part = FacePartition { first, second };

    for side in [PartSide::First, PartSide::Second] {
        let sets = part.get(side);
        for (a, &s) in sets.iter().enumerate() {
            for &t in sets.iter().skip(a + 1) {
                let union = s.union(t);
                if !sets.contains(&union) {
                    return Err(Error::UnionClosure {
                        side: side.number(),
                        s,
                        t,
                        union,
                    });
                }
            }
        }
    }

    if !part.is_trivial() {
        let singles = |set: IndexSet| -> BTreeSet<Option<PartSide>> {
            set.iter()
                .map(|i: ExtIndex| part.side_of(IndexSet::singleton(i)))
                .collect()
        };
        let i_sides = singles(h.i_set());
        let j_sides = singles(h.jbar());
        if i_sides.len() != 1 {
            return Err(Error::SidesMixed("singletons of I are split".into()));
        }
        if j_sides.len() > 1 {
            return Err(Error::SidesMixed("singletons of J̄ are split".into()));
        }
        if i_sides == j_sides {
            return Err(Error::SidesMixed(
                "singletons of I and J̄ share a side".into(),
            ));
        }
    }
    Ok(part)
}

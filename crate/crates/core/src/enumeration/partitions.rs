use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::faces::{Hyperplane, HyperplaneSpec, IndexSet};
use crate::hemispace::{validate_partition, FacePartition, Hemispace, PartSide};

/// Every hyperplane `⊕_{i∈I} x_i = ⊕_{j∈J} x_j ⊕ 0` with `I ∪ J = [n]`,
/// `I ≠ ∅`, ordered by the bit mask of `I`. There are `2^n - 1` of them.
pub fn enumerate_centered_hyperplanes(n: usize) -> Vec<Hyperplane> {
    assert!((1..=20).contains(&n), "n must be in 1..=20");
    (1u32..1 << n)
        .map(|mask| {
            let (i, j): (Vec<usize>, Vec<usize>) = (1..=n).partition(|c| mask >> (c - 1) & 1 == 1);
            Hyperplane::new(&HyperplaneSpec {
                n,
                i,
                j,
                l: vec![],
                alpha: true,
            })
            .expect("centered hyperplane data is valid")
        })
        .collect()
}

const UNSET: u8 = 2;

struct Search<'a> {
    /// Compact codes in descending cardinality.
    order: Vec<usize>,
    side: Vec<u8>,
    /// Side forced on a code by two same-side singletons.
    forced: Vec<u8>,
    assigned: [Vec<usize>; 2],
    out: &'a mut Vec<Vec<u8>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.out.push(self.side.clone());
            return;
        }
        let code = self.order[pos];
        if self.side[code] != UNSET {
            self.run(pos + 1);
            return;
        }
        for s in 0..2u8 {
            if self.forced[code] != UNSET && self.forced[code] != s {
                continue;
            }
            // Sets assigned so far are singletons or at least as large as
            // `code`, so each union with `code` is `code` or already decided.
            let closed = self.assigned[s as usize]
                .iter()
                .all(|&t| code | t == code || self.side[code | t] == s);
            if !closed {
                continue;
            }
            self.side[code] = s;
            self.assigned[s as usize].push(code);
            self.run(pos + 1);
            self.assigned[s as usize].pop();
            self.side[code] = UNSET;
        }
    }
}

/// All proper splits of the k-faces of `h` into two union-closed collections,
/// the first holding `P(J̄)` and the second `P(I)`.
///
/// Sets are assigned in descending cardinality; assigning `S` to a side is
/// rejected when `S ∪ T` for some `T` already on that side lies on the other.
pub fn enumerate_face_partitions(h: &Hyperplane) -> Result<Vec<FacePartition>> {
    if h.has_type_i() || h.has_type_ii() {
        return Err(Error::ExtraFacesPresent);
    }
    let members: Vec<IndexSet> = h.universe().iter().map(IndexSet::singleton).collect();
    let u = members.len();
    let decode = |code: usize| {
        (0..u)
            .filter(|k| code >> k & 1 == 1)
            .fold(IndexSet::EMPTY, |acc, k| acc.union(members[k]))
    };

    let mut side = vec![UNSET; 1 << u];
    let mut assigned: [Vec<usize>; 2] = [vec![], vec![]];
    for (k, m) in members.iter().enumerate() {
        let s = if m.is_subset(h.jbar()) { 0 } else { 1 };
        side[1 << k] = s;
        assigned[s as usize].push(1 << k);
    }
    let mut forced = vec![UNSET; 1 << u];
    for (s, codes) in assigned.iter().enumerate() {
        for &a in codes {
            for &b in codes {
                if a != b {
                    forced[a | b] = s as u8;
                }
            }
        }
    }
    let mut order: Vec<usize> = (1..1 << u).collect();
    order.sort_by_key(|&c| std::cmp::Reverse((c as u32).count_ones()));

    let mut raw = Vec::new();
    Search {
        order,
        side,
        forced,
        assigned,
        out: &mut raw,
    }
    .run(0);

    raw.into_iter()
        .map(|sides| {
            let (mut first, mut second) = (Vec::new(), Vec::new());
            for (code, &s) in sides.iter().enumerate().skip(1) {
                if s == 0 {
                    first.push(decode(code));
                } else {
                    second.push(decode(code));
                }
            }
            validate_partition(h, &first, &second)
        })
        .collect()
}

/// Both members of every proper pair, hyperplane by hyperplane (the member
/// owning `P(J̄)` first), followed by the empty set and the whole space.
pub fn enumerate_hemispaces(n: usize) -> Vec<Hemispace> {
    let mut out: Vec<Hemispace> = enumerate_centered_hyperplanes(n)
        .par_iter()
        .map(hemispaces_of)
        .collect::<Result<Vec<_>>>()
        .expect("centered hyperplanes have no extra faces")
        .into_iter()
        .flatten()
        .collect();
    out.push(Hemispace::empty(n));
    out.push(Hemispace::whole(n));
    out
}

/// Both members of every proper pair related to `h`.
pub fn hemispaces_of(h: &Hyperplane) -> Result<Vec<Hemispace>> {
    let mut out = Vec::new();
    for part in enumerate_face_partitions(h)? {
        let first = Hemispace::new(*h, part, PartSide::First, None, None)?;
        let second = first.complement();
        out.push(first);
        out.push(second);
    }
    Ok(out)
}

/// Number of hemispaces of `R^n_max` related to centered hyperplanes,
/// counted by enumeration: two per proper pair, plus the empty set and the
/// whole space.
pub fn count_hemispaces(n: usize) -> BigUint {
    let pairs: usize = enumerate_centered_hyperplanes(n)
        .par_iter()
        .map(|h| {
            enumerate_face_partitions(h)
                .expect("centered hyperplanes have no extra faces")
                .len()
        })
        .sum();
    BigUint::from(2 * pairs + 2)
}

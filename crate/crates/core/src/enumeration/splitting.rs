use std::collections::BTreeSet;
use std::fmt;

use crate::faces::IndexSet;

/// A ranking of `[m]` with ties: layers listed from the top (largest
/// elements) down. Layers are nonempty, disjoint, and cover `[m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakOrder {
    layers: Vec<IndexSet>,
}

impl WeakOrder {
    /// Returns `None` unless `layers` partition `[m]` into nonempty sets.
    pub fn new(m: usize, layers: Vec<IndexSet>) -> Option<Self> {
        let full = IndexSet::from_coords(1..=m);
        let mut seen = IndexSet::EMPTY;
        for &layer in &layers {
            if layer.is_empty() || !layer.is_disjoint(seen) || layer.has_free_term() {
                return None;
            }
            seen = seen.union(layer);
        }
        (seen == full).then_some(WeakOrder { layers })
    }

    pub fn layers(&self) -> &[IndexSet] {
        &self.layers
    }

    pub fn ground_set(&self) -> IndexSet {
        self.layers
            .iter()
            .fold(IndexSet::EMPTY, |acc, &l| acc.union(l))
    }
}

impl fmt::Display for WeakOrder {
    /// `{2} > {1,3}` lists layers from the top.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.layers.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" > "))
    }
}

/// An unordered split of the nonempty subsets of `[m]` into two
/// union-closed collections, normalized so that `c` contains `[m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Splitting {
    pub c: BTreeSet<IndexSet>,
    pub rest: BTreeSet<IndexSet>,
}

/// Whether `family` contains the union of any two of its members.
pub fn is_union_closed(family: &BTreeSet<IndexSet>) -> bool {
    family
        .iter()
        .all(|&s| family.iter().all(|&t| family.contains(&s.union(t))))
}

/// All weak orders on `[m]`: the top layer ranges over the nonempty subsets
/// of `[m]` in canonical order, then the remaining elements recursively.
pub fn enumerate_weak_orders(m: usize) -> Vec<WeakOrder> {
    fn extend(remaining: IndexSet, prefix: &mut Vec<IndexSet>, out: &mut Vec<WeakOrder>) {
        if remaining.is_empty() {
            out.push(WeakOrder {
                layers: prefix.clone(),
            });
            return;
        }
        for top in remaining.nonempty_subsets() {
            prefix.push(top);
            extend(remaining.difference(top), prefix, out);
            prefix.pop();
        }
    }
    assert!(m >= 1, "m must be positive");
    let mut out = Vec::new();
    extend(IndexSet::from_coords(1..=m), &mut Vec::new(), &mut out);
    out
}

/// Maps a weak order to the splitting whose `c` side holds exactly the sets
/// whose highest layer is an odd-numbered layer (counting from the top).
///
/// Writing `U_t` for the union of the layers below the first `t`, the sets
/// inside `U_t` but not inside `U_{t+1}` alternate between the sides as `t`
/// grows, which makes both sides union-closed.
pub fn weak_order_to_splitting(w: &WeakOrder) -> Splitting {
    let mut c = BTreeSet::new();
    let mut rest = BTreeSet::new();
    for s in w.ground_set().nonempty_subsets() {
        let top = w
            .layers
            .iter()
            .position(|&layer| !layer.is_disjoint(s))
            .expect("layers cover the ground set");
        if top % 2 == 0 {
            c.insert(s);
        } else {
            rest.insert(s);
        }
    }
    Splitting { c, rest }
}

/// All splittings of the nonempty subsets of `[m]` by backtracking over
/// side assignments in canonical order, checking closure against every
/// already-assigned set whose union with the new one is also assigned.
pub fn enumerate_splittings(m: usize) -> Vec<Splitting> {
    assert!((1..=5).contains(&m), "m must be in 1..=5");
    let full = IndexSet::from_coords(1..=m);
    let sets = full.nonempty_subsets();
    let mut sides: Vec<Option<bool>> = vec![None; sets.len()];
    let position = |s: IndexSet| sets.binary_search(&s).expect("subset of [m]");
    let mut out = Vec::new();

    fn consistent(sets: &[IndexSet], sides: &[Option<bool>], k: usize, pos: &dyn Fn(IndexSet) -> usize) -> bool {
        let side = sides[k];
        (0..=k).all(|t| {
            if sides[t] != side {
                return true;
            }
            match sides[pos(sets[k].union(sets[t]))] {
                Some(u) => Some(u) == side,
                None => true,
            }
        }) && (0..k).all(|a| {
            // a pair decided earlier whose union is the set just assigned
            (0..k).all(|b| {
                sides[a] != sides[b] || sets[a].union(sets[b]) != sets[k] || sides[a] == side
            })
        })
    }

    fn go(
        k: usize,
        sets: &[IndexSet],
        sides: &mut Vec<Option<bool>>,
        pos: &dyn Fn(IndexSet) -> usize,
        out: &mut Vec<Splitting>,
    ) {
        if k == sets.len() {
            let mut c = BTreeSet::new();
            let mut rest = BTreeSet::new();
            for (s, side) in sets.iter().zip(sides.iter()) {
                if side == &Some(true) {
                    c.insert(*s);
                } else {
                    rest.insert(*s);
                }
            }
            out.push(Splitting { c, rest });
            return;
        }
        // [m] is the last set in canonical order and always on the `c` side.
        let choices: &[bool] = if k == sets.len() - 1 { &[true] } else { &[true, false] };
        for &choice in choices {
            sides[k] = Some(choice);
            if consistent(sets, sides, k, pos) {
                go(k + 1, sets, sides, pos, out);
            }
            sides[k] = None;
        }
    }

    go(0, &sets, &mut sides, &position, &mut out);
    out
}

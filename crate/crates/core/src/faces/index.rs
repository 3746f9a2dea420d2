use std::cmp::Ordering;
use std::fmt;

/// Largest coordinate index an [`IndexSet`] can hold.
pub const MAX_COORD: usize = 62;

const FREE_BIT: u64 = 1 << 63;

/// An index into the terms of a hyperplane equation: a coordinate `x_i`
/// (1-based) or the free term, which behaves like an extra coordinate fixed
/// at `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtIndex {
    Coord(usize),
    FreeTerm,
}

impl ExtIndex {
    fn bit(self) -> u64 {
        match self {
            ExtIndex::Coord(i) => {
                assert!(
                    (1..=MAX_COORD).contains(&i),
                    "coordinate index {i} out of range"
                );
                1 << (i - 1)
            }
            ExtIndex::FreeTerm => FREE_BIT,
        }
    }
}

impl fmt::Display for ExtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtIndex::Coord(i) => write!(f, "{i}"),
            ExtIndex::FreeTerm => f.write_str("free"),
        }
    }
}

/// A set of [`ExtIndex`] values stored as a bit mask.
///
/// Sets are ordered canonically: by cardinality, then lexicographically on
/// the sorted members, the free term sorting after every coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn singleton(index: ExtIndex) -> Self {
        IndexSet(index.bit())
    }

    pub fn from_coords(coords: impl IntoIterator<Item = usize>) -> Self {
        coords
            .into_iter()
            .map(|i| IndexSet::singleton(ExtIndex::Coord(i)))
            .fold(IndexSet::EMPTY, IndexSet::union)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = ExtIndex>) -> Self {
        indices
            .into_iter()
            .map(IndexSet::singleton)
            .fold(IndexSet::EMPTY, IndexSet::union)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn with(self, index: ExtIndex) -> Self {
        IndexSet(self.0 | index.bit())
    }

    pub fn contains(self, index: ExtIndex) -> bool {
        self.0 & index.bit() != 0
    }

    pub fn has_free_term(self) -> bool {
        self.0 & FREE_BIT != 0
    }

    /// Coordinates only, the free term dropped.
    pub fn coords_only(self) -> Self {
        IndexSet(self.0 & !FREE_BIT)
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending order, free term last.
    pub fn iter(self) -> impl Iterator<Item = ExtIndex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let pos = bits.trailing_zeros();
            bits &= bits - 1;
            Some(if pos == 63 {
                ExtIndex::FreeTerm
            } else {
                ExtIndex::Coord(pos as usize + 1)
            })
        })
    }

    /// Coordinate members, ascending.
    pub fn coords(self) -> impl Iterator<Item = usize> {
        self.iter().filter_map(|i| match i {
            ExtIndex::Coord(c) => Some(c),
            ExtIndex::FreeTerm => None,
        })
    }

    /// Every nonempty subset, in canonical order.
    pub fn nonempty_subsets(self) -> Vec<IndexSet> {
        let members: Vec<ExtIndex> = self.iter().collect();
        assert!(members.len() < 32, "too many indices to enumerate subsets");
        let mut out: Vec<IndexSet> = (1u64..1 << members.len())
            .map(|code| {
                IndexSet::from_indices(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| code >> k & 1 == 1)
                        .map(|(_, &m)| m),
                )
            })
            .collect();
        out.sort();
        out
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<ExtIndex> for IndexSet {
    fn from_iter<T: IntoIterator<Item = ExtIndex>>(iter: T) -> Self {
        IndexSet::from_indices(iter)
    }
}

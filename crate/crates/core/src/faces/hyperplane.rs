use std::fmt;

use super::index::{ExtIndex, IndexSet, MAX_COORD};
use crate::error::{Error, Result};

/// Raw index data for a hyperplane
/// `⊕_{i∈I} x_i = ⊕_{j∈J} x_j ⊕ α`, `x_ℓ = -∞ (ℓ ∈ L)`, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HyperplaneSpec {
    pub n: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub l: Vec<usize>,
    /// `true` when the free term `α = 0` is present.
    pub alpha: bool,
}

/// A max-plus hyperplane in normalized form.
///
/// Invariants: `I`, `J`, `L` are pairwise disjoint subsets of `[n]`, `I` is
/// nonempty, and `J` is nonempty whenever the free term is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    n: usize,
    i: IndexSet,
    j: IndexSet,
    l: IndexSet,
    has_alpha: bool,
}

impl Hyperplane {
    pub fn new(spec: &HyperplaneSpec) -> Result<Self> {
        validate_hyperplane(spec)
    }

    /// `⊕_{i∈[n]} x_i = 0`, the hyperplane used as bookkeeping support for
    /// the empty set and the whole space.
    pub fn all_left(n: usize) -> Self {
        validate_hyperplane(&HyperplaneSpec {
            n,
            i: (1..=n).collect(),
            alpha: true,
            ..Default::default()
        })
        .expect("valid for n >= 1")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn i_set(&self) -> IndexSet {
        self.i
    }

    pub fn j_set(&self) -> IndexSet {
        self.j
    }

    pub fn l_set(&self) -> IndexSet {
        self.l
    }

    pub fn has_alpha(&self) -> bool {
        self.has_alpha
    }

    /// `J̄`: `J` together with the free term when present.
    pub fn jbar(&self) -> IndexSet {
        if self.has_alpha {
            self.j.with(ExtIndex::FreeTerm)
        } else {
            self.j
        }
    }

    /// `I ∪ J̄`, the indices a k-face may tie.
    pub fn universe(&self) -> IndexSet {
        self.i.union(self.jbar())
    }

    pub fn has_type_i(&self) -> bool {
        !self.has_alpha
    }

    pub fn has_type_ii(&self) -> bool {
        !self.l.is_empty()
    }

    /// Strictly affine (free term present) and nondegenerate (`L = ∅`).
    pub fn is_centered(&self) -> bool {
        self.has_alpha && self.l.is_empty()
    }

    /// Coordinates that appear nowhere in the equation, ascending.
    pub fn free_coords(&self) -> Vec<usize> {
        let used = self.i.union(self.j).union(self.l);
        (1..=self.n)
            .filter(|&c| !used.contains(ExtIndex::Coord(c)))
            .collect()
    }

    /// The linear hyperplane in `R^{n+1}_max` obtained by turning the free
    /// term into the coordinate `x_{n+1}`. `None` without a free term.
    pub fn homogenized(&self) -> Option<Hyperplane> {
        if !self.has_alpha {
            return None;
        }
        let mut spec = self.spec();
        spec.n += 1;
        spec.j.push(spec.n);
        spec.alpha = false;
        validate_hyperplane(&spec).ok()
    }

    pub fn spec(&self) -> HyperplaneSpec {
        HyperplaneSpec {
            n: self.n,
            i: self.i.coords().collect(),
            j: self.j.coords().collect(),
            l: self.l.coords().collect(),
            alpha: self.has_alpha,
        }
    }
}

/// Checks raw index data and builds a [`Hyperplane`].
pub fn validate_hyperplane(spec: &HyperplaneSpec) -> Result<Hyperplane> {
    if spec.n == 0 {
        return Err(Error::HyperplaneDimension);
    }
    if spec.n > MAX_COORD {
        return Err(Error::TooManyCoordinates(MAX_COORD));
    }
    let mut seen = IndexSet::EMPTY;
    let mut collect = |indices: &[usize]| -> Result<IndexSet> {
        let mut set = IndexSet::EMPTY;
        for &idx in indices {
            if idx == 0 || idx > spec.n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    n: spec.n,
                });
            }
            let e = ExtIndex::Coord(idx);
            if seen.contains(e) {
                return Err(Error::OverlappingIndex(idx));
            }
            seen = seen.with(e);
            set = set.with(e);
        }
        Ok(set)
    };
    let i = collect(&spec.i)?;
    let j = collect(&spec.j)?;
    let l = collect(&spec.l)?;
    if i.is_empty() {
        return Err(Error::EmptyI);
    }
    if !spec.alpha && j.is_empty() {
        return Err(Error::MissingRightSide);
    }
    Ok(Hyperplane {
        n: spec.n,
        i,
        j,
        l,
        has_alpha: spec.alpha,
    })
}

impl fmt::Display for Hyperplane {
    /// Renders the equation, e.g. `x1 ⊕ x2 = 0` or `x1 = x2, x3 = -inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |set: IndexSet| {
            set.coords()
                .map(|c| format!("x{c}"))
                .collect::<Vec<_>>()
                .join(" ⊕ ")
        };
        let mut rhs = join(self.j);
        if self.has_alpha {
            rhs = if rhs.is_empty() {
                "0".into()
            } else {
                format!("{rhs} ⊕ 0")
            };
        }
        write!(f, "{} = {}", join(self.i), rhs)?;
        for l in self.l.coords() {
            write!(f, ", x{l} = -inf")?;
        }
        Ok(())
    }
}

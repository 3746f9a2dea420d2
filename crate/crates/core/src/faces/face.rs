use std::fmt;

use super::hyperplane::Hyperplane;
use super::index::{ExtIndex, IndexSet};
use crate::error::{Error, Result};
use crate::maxplus::{segment_point, segment_samples, ExtScalar, Point};

/// A face of the conical decomposition of `R^n_max` induced by a hyperplane.
///
/// `K(set)` is the k-face whose terms in `set` are tied, finite, and strictly
/// dominant among the terms of `I ∪ J̄`, with every `L` coordinate at `-∞`.
/// Its codimension is `|set| - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceId {
    K(IndexSet),
    /// Every coordinate of `I ∪ J ∪ L` at `-∞` (free term absent).
    TypeI,
    /// Some coordinate of `L` above `-∞`.
    TypeII,
}

impl FaceId {
    pub fn index_set(&self) -> Option<IndexSet> {
        match self {
            FaceId::K(k) => Some(*k),
            _ => None,
        }
    }

    pub fn codimension(&self) -> Option<usize> {
        self.index_set().map(|k| k.len() - 1)
    }

    /// A k-face whose index set meets both sides of the equation.
    pub fn is_pure(&self, h: &Hyperplane) -> bool {
        match self {
            FaceId::K(k) => !k.is_disjoint(h.i_set()) && !k.is_disjoint(h.jbar()),
            _ => false,
        }
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceId::K(k) => write!(f, "F{k}"),
            FaceId::TypeI => f.write_str("F_I"),
            FaceId::TypeII => f.write_str("F_II"),
        }
    }
}

/// Which strict side of the hyperplane a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `⊕_I x_i < ⊕_J x_j ⊕ α`
    Below,
    /// `⊕_I x_i > ⊕_J x_j ⊕ α`
    Above,
    Boundary,
}

/// Every face of `h`, k-faces in canonical index-set order, then the type-I
/// face (free term absent) and the type-II face (`L` nonempty).
pub fn face_catalog(h: &Hyperplane) -> Vec<FaceId> {
    let mut faces: Vec<FaceId> = h
        .universe()
        .nonempty_subsets()
        .into_iter()
        .map(FaceId::K)
        .collect();
    if h.has_type_i() {
        faces.push(FaceId::TypeI);
    }
    if h.has_type_ii() {
        faces.push(FaceId::TypeII);
    }
    faces
}

pub(crate) fn in_catalog(h: &Hyperplane, face: FaceId) -> bool {
    match face {
        FaceId::K(k) => !k.is_empty() && k.is_subset(h.universe()),
        FaceId::TypeI => h.has_type_i(),
        FaceId::TypeII => h.has_type_ii(),
    }
}

fn check_dim(h: &Hyperplane, p: &Point) -> Result<()> {
    if p.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: p.dim(),
        });
    }
    Ok(())
}

fn term_value(p: &Point, index: ExtIndex) -> ExtScalar {
    match index {
        ExtIndex::Coord(c) => p.coord(c),
        ExtIndex::FreeTerm => ExtScalar::ZERO,
    }
}

/// The unique face of `h` containing `p`.
pub fn classify(h: &Hyperplane, p: &Point) -> Result<FaceId> {
    check_dim(h, p)?;
    if h.l_set().coords().any(|l| p.coord(l).is_finite()) {
        return Ok(FaceId::TypeII);
    }
    let mut best = ExtScalar::Bottom;
    let mut argmax = IndexSet::EMPTY;
    for idx in h.universe().iter() {
        let v = term_value(p, idx);
        if v > best {
            best = v;
            argmax = IndexSet::singleton(idx);
        } else if v == best {
            argmax = argmax.with(idx);
        }
    }
    if best.is_bottom() {
        return Ok(FaceId::TypeI);
    }
    Ok(FaceId::K(argmax))
}

/// A fixed witness point of `face`.
pub fn representative(h: &Hyperplane, face: FaceId) -> Result<Point> {
    if !in_catalog(h, face) {
        return Err(Error::FaceNotInCatalog(face));
    }
    let zero = ExtScalar::ZERO;
    let mut coords = vec![zero; h.dim()];
    let ij = h.i_set().union(h.j_set());
    match face {
        FaceId::K(k) => {
            let (tied, rest) = if k.has_free_term() {
                (zero, ExtScalar::int(-1))
            } else {
                (ExtScalar::int(1), zero)
            };
            for c in ij.coords() {
                coords[c - 1] = if k.contains(ExtIndex::Coord(c)) { tied } else { rest };
            }
            for l in h.l_set().coords() {
                coords[l - 1] = ExtScalar::Bottom;
            }
        }
        FaceId::TypeI => {
            for c in ij.union(h.l_set()).coords() {
                coords[c - 1] = ExtScalar::Bottom;
            }
        }
        FaceId::TypeII => {
            for c in ij.coords() {
                coords[c - 1] = ExtScalar::Bottom;
            }
        }
    }
    Point::new(coords)
}

/// `Bd(F1, F2)`: the k-face indexed by `K_{F1} ∪ K_{F2}`.
pub fn boundary_subface(h: &Hyperplane, f1: FaceId, f2: FaceId) -> Result<FaceId> {
    let mut union = IndexSet::EMPTY;
    for f in [f1, f2] {
        let k = f.index_set().ok_or(Error::NotAKFace(f))?;
        if !in_catalog(h, f) {
            return Err(Error::FaceNotInCatalog(f));
        }
        union = union.union(k);
    }
    Ok(FaceId::K(union))
}

/// Compares the two sides of the equation at `p`.
///
/// Points with a finite `L` coordinate are outside the halfspace's domain
/// and are rejected.
pub fn side_of(h: &Hyperplane, p: &Point) -> Result<Side> {
    check_dim(h, p)?;
    if let Some(l) = h.l_set().coords().find(|&l| p.coord(l).is_finite()) {
        return Err(Error::LConstraintViolated(l));
    }
    let max_over = |set: IndexSet| {
        set.iter()
            .map(|idx| term_value(p, idx))
            .fold(ExtScalar::Bottom, ExtScalar::oplus)
    };
    let lhs = max_over(h.i_set());
    let rhs = max_over(h.jbar());
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Side::Below,
        std::cmp::Ordering::Greater => Side::Above,
        std::cmp::Ordering::Equal => Side::Boundary,
    })
}

/// The faces met along `[x, y]`, walking from `x` to `y`, consecutive
/// repeats removed.
pub fn segment_face_trace(h: &Hyperplane, x: &Point, y: &Point) -> Result<Vec<FaceId>> {
    check_dim(h, x)?;
    check_dim(h, y)?;
    let mut trace: Vec<FaceId> = Vec::new();
    for param in segment_samples(x, y)?.into_iter().rev() {
        let face = classify(h, &segment_point(x, y, param)?)?;
        if trace.last() != Some(&face) {
            trace.push(face);
        }
    }
    Ok(trace)
}

/// Human-readable defining conditions of a face, e.g. `["x1 > x2", "x1 > 0"]`.
pub fn face_conditions(h: &Hyperplane, face: FaceId) -> Result<Vec<String>> {
    if !in_catalog(h, face) {
        return Err(Error::FaceNotInCatalog(face));
    }
    let name = |idx: ExtIndex| match idx {
        ExtIndex::Coord(c) => format!("x{c}"),
        ExtIndex::FreeTerm => "0".to_string(),
    };
    let mut out = Vec::new();
    match face {
        FaceId::K(k) => {
            let mut tied: Vec<ExtIndex> = k.iter().collect();
            // The free term reads best as the reference value.
            tied.rotate_right(usize::from(k.has_free_term()));
            let lead = name(tied[0]);
            for &t in &tied[1..] {
                out.push(format!("{} = {lead}", name(t)));
            }
            if !k.has_free_term() && !h.has_alpha() {
                out.push(format!("{lead} > -inf"));
            }
            for other in h.universe().difference(k).iter() {
                match other {
                    ExtIndex::FreeTerm => out.push(format!("{lead} > 0")),
                    _ => out.push(format!("{} < {lead}", name(other))),
                }
            }
            for l in h.l_set().coords() {
                out.push(format!("x{l} = -inf"));
            }
        }
        FaceId::TypeI => {
            for c in h.i_set().union(h.j_set()).union(h.l_set()).coords() {
                out.push(format!("x{c} = -inf"));
            }
        }
        FaceId::TypeII => {
            let alts: Vec<String> = h.l_set().coords().map(|l| format!("x{l} > -inf")).collect();
            out.push(alts.join(" or "));
        }
    }
    Ok(out)
}

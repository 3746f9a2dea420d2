use std::fmt;

use super::partition::{FacePartition, PartSide};
use crate::error::{Error, Result};
use crate::faces::{classify, FaceId, Hyperplane};
use crate::maxplus::{ExtScalar, Point};

/// How the type-I face is divided between the two members of a pair.
///
/// The type-I face of a hyperplane is a copy of `R^d_max` on the `d`
/// coordinates absent from the equation, and a convex 2-partition of it is a
/// hemispace pair there. `Split` holds the first member's part as a
/// hemispace of that subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeISplit {
    AllToFirst,
    AllToSecond,
    Split(Box<Hemispace>),
}

/// The part of the type-I face owned by one particular hemispace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeIShare {
    All,
    Nothing,
    Part(Box<Hemispace>),
}

impl TypeIShare {
    fn complement(&self) -> Self {
        match self {
            TypeIShare::All => TypeIShare::Nothing,
            TypeIShare::Nothing => TypeIShare::All,
            TypeIShare::Part(sub) => TypeIShare::Part(Box::new(sub.complement())),
        }
    }
}

/// A union of faces of a hyperplane (with possibly part of its type-I face)
/// whose complement is the other member of the pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hemispace {
    hyperplane: Hyperplane,
    partition: FacePartition,
    owns: PartSide,
    type_i: Option<TypeIShare>,
    type_ii: Option<bool>,
}

/// Two complementary hemispaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HemispacePair {
    pub first: Hemispace,
    pub second: Hemispace,
}

impl Hemispace {
    /// Builds a hemispace owning `side` of `partition`, with type-I and
    /// type-II shares given relative to this hemispace.
    pub fn new(
        hyperplane: Hyperplane,
        partition: FacePartition,
        owns: PartSide,
        type_i: Option<TypeIShare>,
        type_ii: Option<bool>,
    ) -> Result<Self> {
        if hyperplane.has_type_i() != type_i.is_some() {
            return Err(Error::TypeISplit(if type_i.is_some() {
                "given for a hyperplane without a type-I face"
            } else {
                "missing for a hyperplane with a type-I face"
            }));
        }
        if hyperplane.has_type_ii() != type_ii.is_some() {
            return Err(Error::TypeIIAssignment(if type_ii.is_some() {
                "given for a hyperplane without a type-II face"
            } else {
                "missing for a hyperplane with a type-II face"
            }));
        }
        if let Some(TypeIShare::Part(sub)) = &type_i {
            let d = hyperplane.free_coords().len();
            if d == 0 {
                return Err(Error::TypeISplit(
                    "cannot split a single-point type-I face",
                ));
            }
            if sub.dim() != d {
                return Err(Error::TypeISplit(
                    "sub-hemispace dimension differs from the number of free coordinates",
                ));
            }
        }
        Ok(Hemispace {
            hyperplane,
            partition,
            owns,
            type_i,
            type_ii,
        })
    }

    /// The empty set of `R^n_max`.
    pub fn empty(n: usize) -> Self {
        Hemispace::whole(n).complement()
    }

    /// All of `R^n_max`.
    pub fn whole(n: usize) -> Self {
        let h = Hyperplane::all_left(n);
        Hemispace {
            partition: FacePartition::all_first(&h),
            hyperplane: h,
            owns: PartSide::First,
            type_i: None,
            type_ii: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.hyperplane.dim()
    }

    pub fn hyperplane(&self) -> &Hyperplane {
        &self.hyperplane
    }

    pub fn partition(&self) -> &FacePartition {
        &self.partition
    }

    pub fn owned_side(&self) -> PartSide {
        self.owns
    }

    pub fn type_i(&self) -> Option<&TypeIShare> {
        self.type_i.as_ref()
    }

    pub fn type_ii(&self) -> Option<bool> {
        self.type_ii
    }

    /// Whether this hemispace contains the given k-face or extra face
    /// entirely. `None` for a type-I face that is split.
    pub fn owns_face(&self, face: FaceId) -> Option<bool> {
        match face {
            FaceId::K(k) => self.partition.side_of(k).map(|s| s == self.owns),
            FaceId::TypeII => self.type_ii,
            FaceId::TypeI => match self.type_i.as_ref()? {
                TypeIShare::All => Some(true),
                TypeIShare::Nothing => Some(false),
                TypeIShare::Part(_) => None,
            },
        }
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        let face = classify(&self.hyperplane, p)?;
        Ok(match face {
            FaceId::K(k) => self.partition.side_of(k) == Some(self.owns),
            FaceId::TypeII => self.type_ii == Some(true),
            FaceId::TypeI => match &self.type_i {
                Some(TypeIShare::All) => true,
                Some(TypeIShare::Nothing) | None => false,
                Some(TypeIShare::Part(sub)) => {
                    sub.contains(&p.restrict(&self.hyperplane.free_coords())?)?
                }
            },
        })
    }

    /// The other member of the pair.
    pub fn complement(&self) -> Hemispace {
        Hemispace {
            hyperplane: self.hyperplane,
            partition: self.partition.clone(),
            owns: self.owns.flip(),
            type_i: self.type_i.as_ref().map(TypeIShare::complement),
            type_ii: self.type_ii.map(|b| !b),
        }
    }

    /// Membership over the grid `values^n`, first coordinate varying slowest.
    pub fn signature(&self, values: &[ExtScalar]) -> Result<Signature> {
        if values.is_empty() {
            return Ok(Signature(Vec::new()));
        }
        let n = self.dim();
        let total = values.len().pow(n as u32);
        let mut bits = Vec::with_capacity(total);
        let mut digits = vec![0usize; n];
        for _ in 0..total {
            let p = Point::new(digits.iter().map(|&d| values[d]).collect())?;
            bits.push(self.contains(&p)?);
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < values.len() {
                    break;
                }
                *d = 0;
            }
        }
        Ok(Signature(bits))
    }
}

/// Membership bits of a hemispace over a grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(pub Vec<bool>);

impl Signature {
    pub fn not(&self) -> Signature {
        Signature(self.0.iter().map(|b| !b).collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Builds the pair whose first member owns `side` of `partition`, the
/// type-I part chosen by `type_i` and the type-II face iff `type_ii` is true.
///
/// `type_i` must be given exactly when the hyperplane has a type-I face and
/// `type_ii` exactly when it has a type-II face.
pub fn assemble(
    h: &Hyperplane,
    partition: &FacePartition,
    side: PartSide,
    type_i: Option<TypeISplit>,
    type_ii: Option<bool>,
) -> Result<HemispacePair> {
    let share = type_i.map(|t| match t {
        TypeISplit::AllToFirst => TypeIShare::All,
        TypeISplit::AllToSecond => TypeIShare::Nothing,
        TypeISplit::Split(sub) => TypeIShare::Part(sub),
    });
    let first = Hemispace::new(*h, partition.clone(), side, share, type_ii)?;
    let second = first.complement();
    Ok(HemispacePair { first, second })
}

/// The grid `{-∞, -2, -1, 0, 1, 2}` per coordinate.
pub fn standard_grid() -> Vec<ExtScalar> {
    std::iter::once(ExtScalar::Bottom)
        .chain((-2..=2).map(ExtScalar::int))
        .collect()
}

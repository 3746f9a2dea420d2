use thiserror::Error;

use crate::faces::{FaceId, IndexSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid scalar `{0}` (expected an integer, p/q, or -inf)")]
    Scalar(String),
    #[error("invalid point `{0}`")]
    Point(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("points must have at least one coordinate")]
    ZeroDimension,
    #[error("segment parameters must satisfy max(alpha, beta) = 0, got ({alpha}, {beta})")]
    InvalidSegmentParam { alpha: String, beta: String },

    #[error("hyperplane dimension must be at least 1")]
    HyperplaneDimension,
    #[error("hyperplane has an empty left-hand index set I")]
    EmptyI,
    #[error("hyperplane without a free term needs a nonempty J")]
    MissingRightSide,
    #[error("index {0} appears in more than one of I, J, L")]
    OverlappingIndex(usize),
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("hyperplane supports at most {0} coordinates")]
    TooManyCoordinates(usize),

    #[error("face {0} is not a face of this hyperplane")]
    FaceNotInCatalog(FaceId),
    #[error("face {0} is not a k-face")]
    NotAKFace(FaceId),
    #[error("coordinate x{0} must be -inf for points of this hyperplane's halfspace")]
    LConstraintViolated(usize),

    #[error("not a partition of the k-faces: {0}")]
    NotAPartition(String),
    #[error("side {side} is not closed under union: {s} ∪ {t} = {union} lies on the other side")]
    UnionClosure {
        side: u8,
        s: IndexSet,
        t: IndexSet,
        union: IndexSet,
    },
    #[error("singletons of I and of J̄ must lie on opposite sides: {0}")]
    SidesMixed(String),
    #[error("type-I split {0}")]
    TypeISplit(&'static str),
    #[error("type-II assignment {0}")]
    TypeIIAssignment(&'static str),
    #[error("rendering needs a hyperplane in R^2_max, got n = {0}")]
    RenderDimension(usize),
    #[error("enumeration is only defined for hyperplanes without type-I or type-II faces")]
    ExtraFacesPresent,
}

//! Normalized max-plus hyperplanes and the face decomposition of
//! `R^n_max` they induce.
//!
//! A hyperplane `⊕_{i∈I} x_i = ⊕_{j∈J} x_j ⊕ α`, `x_ℓ = -∞ (ℓ ∈ L)` splits
//! the space into k-faces, one per nonempty subset `K ⊆ I ∪ J̄` (the terms
//! that tie for the maximum), plus the extra type-I face when the free term
//! is missing and the type-II face when `L` is nonempty. The free term is
//! treated as a term with constant value `0`, so classification is a single
//! argmax over `I ∪ J̄`.

mod face;
mod hyperplane;
mod index;
mod sample;

pub use face::{
    boundary_subface, classify, face_catalog, face_conditions, representative, segment_face_trace,
    side_of, FaceId, Side,
};
pub use hyperplane::{validate_hyperplane, Hyperplane, HyperplaneSpec};
pub use index::{ExtIndex, IndexSet, MAX_COORD};
pub use sample::{random_point_in_face, random_positive, random_rational, random_scalar};

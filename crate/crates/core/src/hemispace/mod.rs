//! Hemispaces as unions of faces.
//!
//! A pair of complementary hemispaces related to a hyperplane is given by a
//! split of its k-faces into two union-closed collections, a convex split of
//! the type-I face, and a side for the type-II face.

mod assembly;
mod convexity;
mod partition;

pub use assembly::{
    assemble, standard_grid, Hemispace, HemispacePair, Signature, TypeISplit, TypeIShare,
};
pub use convexity::{
    check_hemispace, check_segment, convexity_check, ConvexityReport, Counterexample,
    FaceSampler, GridSampler, PointSampler,
};
pub use partition::{validate_partition, FacePartition, PartSide};

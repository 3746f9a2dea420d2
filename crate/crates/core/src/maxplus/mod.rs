//! Max-plus arithmetic on `R^n_max`: scalars, points, and segments.

mod point;
mod scalar;
mod segment;

pub use point::{oplus, scale, Point};
pub use scalar::{ExtScalar, Rational};
pub use segment::{segment_breakpoints, segment_point, segment_samples, SegmentParam};

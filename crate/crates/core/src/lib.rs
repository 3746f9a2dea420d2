//! Max-plus hemispaces: face decompositions of max-plus hyperplanes,
//! hemispaces assembled from faces, and exact enumeration and counting of the
//! hemispaces supported by hyperplanes centered at the origin.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod faces;
pub mod hemispace;
pub mod json;
pub mod maxplus;
pub mod render;
pub mod verify;

pub use error::{Error, ParseError, Result};

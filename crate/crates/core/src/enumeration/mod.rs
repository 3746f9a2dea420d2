//! Enumeration and counting of the hemispaces related to hyperplanes
//! centered at the origin, with the ordered Bell numbers that count them and
//! the weak orders that index the splittings of a power set.

mod bell;
mod census;
mod partitions;
mod splitting;

pub use bell::{bell_f, bell_f_table, bell_standard};
pub use census::{census_n3, classify_origin_side, CensusCase, CensusTally};
pub use partitions::{
    count_hemispaces, enumerate_centered_hyperplanes, enumerate_face_partitions,
    enumerate_hemispaces, hemispaces_of,
};
pub use splitting::{
    enumerate_splittings, enumerate_weak_orders, is_union_closed, weak_order_to_splitting,
    Splitting, WeakOrder,
};

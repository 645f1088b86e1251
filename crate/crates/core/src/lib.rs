//! Partitions by perimeter: boundary words, statistics, enumeration, the
//! `φ_d` bijections and `ξ` injection, counting tables, generating-function
//! expansion and finite verification of the equidistribution results.

pub mod bijection;
pub mod boundary;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod partition;
mod ser;
pub mod series;
pub mod stats;
pub mod verify;

pub use boundary::BoundarySequence;
pub use error::{Error, Result};
pub use partition::{LabeledPartition, Partition};
pub use stats::Statistic;

//! Library side of the `pcmax` command: suite generation, algorithm runs,
//! pairwise comparison tables, the LP verification battery and the bound
//! conformance sweep.

pub mod algo;
pub mod compare;
pub mod conformance;
pub mod suite;
pub mod verify;

pub use algo::{run, Algorithm, Run};

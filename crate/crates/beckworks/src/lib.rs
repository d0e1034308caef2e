//! Constructive bijections and set decompositions for Euler-type partition
//! identities, together with a brute-force verification harness.
//!
//! The crate has three layers:
//!
//! * combinatorial objects: [`partition::Partition`] with the canonical text
//!   grammar, k-adic digit expansions in [`kadic`], and the partition
//!   families and statistics of [`families`];
//! * the constructions: the generalized split and merge bijections in
//!   [`glaisher`], the one-divisible cover in [`beck_one`], the carry-merge
//!   cover in [`beck_two`], and the gap-free block operators in [`gapfree`];
//! * checking: [`verify`] evaluates every identity in the catalog by
//!   independent enumeration of both sides, at the weights where exhaustive
//!   search is feasible.
//!
//! Enumeration-heavy entry points parallelize with rayon when the default
//! `parallel` feature is on and degrade to sequential loops without it; see
//! [`exec`].

pub mod beck_one;
pub mod beck_two;
pub mod cover;
mod error;
pub mod exec;
pub mod families;
pub mod gapfree;
pub mod glaisher;
pub mod kadic;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, PartitionStats};

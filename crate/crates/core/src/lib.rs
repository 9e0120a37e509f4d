//! Combinatorics of smooth permutations in the symmetric group.
//!
//! The crate revolves around four families of objects in bijection with each
//! other for every n:
//!
//! - smooth permutations of S_n (those avoiding 4231 and 3412, equivalently
//!   with `ℓ(σ) = #C_T(σ)`),
//! - admissible sets of 2- and 3-cycles,
//! - decorated Dyck paths,
//! - coessential grid sets.
//!
//! The maps between them are constructive in both directions and every one
//! of them is backed by an exhaustive brute-force oracle at small n; the
//! `verify` machinery of the companion CLI and the `acceptance` test suite
//! exercise the full diagram.
//!
//! Everything is exact: permutations and tables are integer combinatorics,
//! and the enumeration module uses arbitrary-precision integers throughout.
//! All values are immutable after construction and all operations are pure,
//! so sweeps parallelize trivially.

#![forbid(unsafe_code)]

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;

pub mod admissible;
pub mod covexillary;
pub mod cycles;
pub mod dyck;
pub mod enumeration;
pub mod error;
pub mod essential;
pub mod partitions;
pub mod perm;
pub mod tables;

pub use admissible::{AdmissibleSet, CompatibleOrder, Side, Wedge};
pub use cycles::{CycleElem, Direction, GeneralCycle};
pub use dyck::DecoratedPath;
pub use error::{Error, Result};
pub use essential::GridSet;
pub use partitions::Partition;
pub use perm::{MaxFunction, Permutation};
pub use tables::{CycleTable, Table23};

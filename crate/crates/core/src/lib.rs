//! Finite graded rings, their graded ideal lattices, and the intersection
//! graphs built on top of them.
//!
//! Everything here is table driven: a ring is a pair of dense operation
//! tables over `0..n`, a grading is a direct-sum decomposition of those
//! indices into additive subgroups, and ideals are bit sets over the
//! element indices. The crate is `no_std` and only needs `alloc`; file
//! formats, exports and the command line live in the `ideal-graph` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod error;
pub mod grading;
pub mod graph;
pub mod ideal;
pub mod limits;
pub mod ordered;
pub mod planarity;
pub mod ring;
pub mod structure;
pub mod theorems;

pub use bitset::ElemSet;
pub use error::Error;
pub use grading::{Degree, GradeGroup, Grading, GradingKind};
pub use graph::{Extended, GraphInvariants, IntersectionGraph, ShapeFlags};
pub use planarity::Planarity;
pub use ideal::IdealSet;
pub use limits::Limits;
pub use ring::{Construction, FiniteGroup, FiniteModule, FiniteRing};
pub use theorems::{Analysis, TheoremReport, Verdict};

pub type Result<T, E = Error> = core::result::Result<T, E>;

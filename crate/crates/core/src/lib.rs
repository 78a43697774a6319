//! Automorphism machinery and fixing invariants for small graphs, with a focus on the
//! non-zero component graph of a finite vector space over a prime field.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything here is a pure function of its
//! inputs; IO, file formats and the command line live in the `symforge` crate.
//!
//! Layout:
//!
//! * [`vecspace`]: vectors over GF(q), skeletons, tiers and the non-zero component graph.
//! * [`graph`]: the simple undirected graph type with bitset adjacency rows.
//! * [`autgroup`]: permutations, full automorphism group enumeration, orbits and stabilizers.
//! * [`fixing`]: fixing sets, fixing number, fixed number, fixing neighbourhoods and the
//!   fixing graph.
//! * [`constructions`]: the star-union family whose fixed/fixing gap grows without bound.
//! * [`verify`]: named machine checks for each structural claim about these graphs.
#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod autgroup;
pub mod bitset;
pub mod constructions;
mod error;
pub mod fixing;
pub mod graph;
pub mod math;
pub mod vecspace;
pub mod verify;

pub use autgroup::{automorphism_group, AutGroup, Orbit, Perm};
pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use vecspace::{Space, Vect};

/// Resource caps applied before any exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph order accepted by the automorphism search.
    pub max_order: usize,
    /// Largest automorphism group the enumerator will materialise.
    pub max_group_order: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: usize = 64;
    pub const DEFAULT_MAX_GROUP_ORDER: usize = 2_000_000;

    pub fn with_max_order(self, max_order: usize) -> Self {
        Limits { max_order, ..self }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_group_order: Self::DEFAULT_MAX_GROUP_ORDER,
        }
    }
}

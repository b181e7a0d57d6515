//! Construction of many edge-disjoint Hamilton cycles in dense regular
//! bipartite digraphs.
//!
//! The crate is organised around a randomized three-stage pipeline:
//!
//! 1. [`partition`] splits a regular balanced bipartite digraph into many
//!    edge-disjoint spanning subdigraphs, each paired with a small reservoir
//!    vertex set kept aside for stitching.
//! 2. [`pathcover`] covers the non-reservoir part of each subdigraph with
//!    many edge-disjoint path covers by chaining near-perfect matchings
//!    along Hamilton paths of a small complete bipartite digraph.
//! 3. [`pipeline`] closes each path cover into a Hamilton cycle through the
//!    reservoir, using classical constructive subroutines ([`hampath`]) for
//!    the reservoir-internal paths.
//!
//! The stages rely on concentration of randomized choices, so every stage
//! verifies its own output and retries on failure instead of trusting
//! probability estimates. All randomness is seeded and call-local.
//!
//! Alongside the pipeline the crate ships input generators ([`generators`]),
//! bipartite matching machinery ([`matching`]), a greedy baseline
//! decomposer, and brute-force oracles ([`verify`]) that serve as ground
//! truth on small instances.
//!
//! The crate is `no_std` compatible (it requires `alloc`); IO, file formats
//! and the command-line interface live in the companion `hamdec` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod digraph;
pub mod error;
pub mod generators;
pub mod hampath;
pub mod matching;
pub mod partition;
pub mod pathcover;
pub mod pipeline;
pub mod verify;

mod search;

pub use digraph::{BipartiteDigraph, Digraph, Edge, EdgeSet, Side, VertexId, VertexSet};
pub use error::{Error, Result};
pub use generators::{HamCycle, HamPath};
pub use pipeline::{Clock, DecompositionConfig, DecompositionResult, Mode, NullClock};

/// Convenience seeded RNG used across the crate.
///
/// ChaCha8 is deterministic across platforms, which keeps every seeded
/// operation reproducible in tests and in the CLI.
pub(crate) fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

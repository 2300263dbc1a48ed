//! Expansion signatures and decentralized search for complex networks.
//!
//! `xsearch` measures how well small vertex samples of a network "expand"
//! (reach many outside neighbors) and simulates four decentralized search
//! strategies that exploit that structure:
//!
//! - [`graph`] — immutable undirected simple graphs, SNAP-style edge-list
//!   ingestion, Erdős–Rényi and Barabási–Albert generators, and network
//!   statistics (density, clustering, characteristic path length).
//! - [`expansion`] — expansion and expansion-quality arithmetic, a greedy
//!   (1 − 1/e) approximation for the maximum-expansion sample, an exact
//!   brute-force oracle for small instances, and expansion-signature curves.
//! - [`search`] — expansion search (XS), degree search (DS), self-avoiding
//!   random walk (RW), and an idealized no-redundancy BFS, simulated under a
//!   per-hop step accounting with coverage traces.
//! - [`harness`] — dataset registry with HTTP fetching and caching,
//!   experiment orchestration, and CSV/JSON result persistence backing the
//!   `xsearch` command-line tool.
//!
//! Every randomized operation takes an explicit seed and is fully
//! reproducible: identical inputs produce byte-identical outputs.
//!
//! See the crate examples (`cargo run --example search_strategies`, …) for
//! runnable walkthroughs of each capability.

pub mod expansion;
pub mod graph;
pub mod harness;
pub mod ratio;
pub mod search;

pub use graph::{Graph, GraphStats, NodeId};
pub use ratio::Ratio;

//! Wiener index of simple connected graphs and an exact lower bound on it in
//! terms of order, size and diameter.
//!
//! - [`graph`] and [`graph6`]: immutable graphs, edge-list text and graph6.
//! - [`metrics`]: BFS distances, distance distribution, Wiener index,
//!   diameter, diametral path and pair partition.
//! - [`bounds`]: the order/size/diameter bound, its terms, and the Moore
//!   bound corollary.
//! - [`generators`]: paths, cycles, stars, complete graphs, products,
//!   Petersen, random connected graphs.
//! - [`verifier`]: exhaustive, streamed and random sweeps plus property
//!   checks.

pub mod bounds;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod rng;
pub mod verifier;

pub use bounds::{evaluate, BoundReport, MooreResult};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6};
pub use metrics::{DiametralPartition, DistanceDistribution};
pub use verifier::{Execution, SweepSummary};

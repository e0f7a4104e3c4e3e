//! Total monochromatic connection numbers: exact solving, bounds,
//! closed-form classification, constructions, and random-graph probes.
//!
//! A total coloring of a connected graph (colors on vertices and edges,
//! adjacent or incident elements may repeat colors) is total
//! monochromatically connecting when every pair of vertices is joined by
//! a path whose edges and internal vertices all share one color. tmc(G)
//! is the largest number of colors such a coloring can use; disconnected
//! graphs get tmc = 0.

pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod randgraph;
pub mod solver;
pub mod spanning;
pub mod theorems;

/// Schema tag stamped into every JSON document this crate emits.
pub const SCHEMA: &str = "tmc-lab/1";

pub use error::{Error, Result};
pub use graph::Graph;
pub use solver::{tmc_exact, tmc_lower_bound, tmc_upper_bound, tmc_with_budget, TmcOutcome, TmcValue};

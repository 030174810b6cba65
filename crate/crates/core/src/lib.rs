//! Decomposition machinery for clock-free graphs: pattern detectors,
//! clique cutsets, clique-pair closures, central bags, balanced separators
//! and exact treewidth, plus an exhaustive verification harness.

pub mod cliques;
pub mod cutsets;
pub mod error;
pub mod graph;
pub mod harness;
pub mod obstructions;
pub mod patterns;
pub mod separations;
pub mod treewidth;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{EmbeddedPath, Graph, VertexSet};
pub use patterns::{find_pattern, PatternKind, PatternWitness};

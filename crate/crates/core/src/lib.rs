//! Exact toughness, vertex connectivity, independence number and induced
//! star analysis for graphs of up to 64 vertices, together with the `J_m`
//! family of 4-regular graphs with claws, a checker for its structural
//! properties, and a census of small supertough regular graphs.

pub mod cli;
pub mod format;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod rational;
pub mod search;
pub mod verify;

pub use graph::{Graph, GraphError, VertexSet};
pub use rational::{ExtRational, Rational};

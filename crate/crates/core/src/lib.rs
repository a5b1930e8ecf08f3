//! Monochromatic k-connected edge-colourings.
//!
//! An edge-colouring of a graph is *monochromatic k-connected* when every
//! pair of vertices is joined by `k` internally vertex-disjoint paths, each
//! of a single colour. This crate decides that property, computes and bounds
//! `mc_k(G)` (the most colours such a colouring can use), and generates the
//! extremal graphs and colourings around it.

pub mod arith;
pub mod colouring;
pub mod constructions;
pub mod graph;
pub mod random;
pub mod solver;
pub mod verify;

pub use colouring::{Colour, ColouringError, EdgeColouring, PairFunction};
pub use graph::{Edge, Graph, GraphError, GraphFormat, Vertex};
pub use solver::{BoundsReport, SearchBudget};
pub use verify::{PathSystem, VerifyReport};



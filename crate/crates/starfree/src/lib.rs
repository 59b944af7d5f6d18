//! Coloring graphs that exclude an induced star forest.
//!
//! For any star forest H there is a constant c with chi(G) <= omega(G)^c for
//! every H-free graph G. This crate makes that bound constructive: it builds
//! the coloring, records the full decomposition as a machine-checkable trace,
//! and ships exact (exponential-time, small-scale) oracles for clique number,
//! stability number, chromatic number, and induced-subgraph containment that
//! audit every step.

pub mod bitset;
pub mod cli;
pub mod colorer;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod pattern;

pub use bitset::VertexSet;
pub use graph::Graph;
pub use pattern::StarForest;

//! Exact counting for set colorings of graphs.
//!
//! A *set k-coloring* gives every vertex a subset of `{1, ..., k}`; it is
//! proper when adjacent vertices receive sets of different cardinality.
//! On the complete graph this is the urn-filling problem: place color sets
//! into `n` labelled urns so that no two urns hold the same number of
//! colors. This crate computes those counts two independent ways — a
//! product generating function and a Möbius sum over the lattice of
//! connected partitions — plus a weighted generalization, coloring from a
//! partitioned set, and the permutation-gain-graph view, all in exact
//! big-integer arithmetic. Brute-force enumerators act as referees for
//! every formula.

pub mod chromafn;
pub mod combinatorics;
mod error;
pub mod gaingraph;
pub mod genfunc;
pub mod graph;
pub mod oracle;

pub use chromafn::{BlockSizeProfile, ClosedForm};
pub use combinatorics::BigCount;
pub use error::{Error, Result};
pub use gaingraph::{GainEdge, Permutation, PermutationGainGraph, ProbeReport};
pub use genfunc::{CoefficientPolynomial, ModeEstimate, WeightSequence};
pub use graph::{BondLattice, Partition, SimpleGraph};

//! Algorithms for the maximum edge-colorable subgraph problem: given a graph
//! and a palette of p colors, find (or decide the existence of) a subgraph
//! with at least l edges that admits a proper edge coloring — equivalently,
//! p disjoint matchings covering at least l edges.
//!
//! The crate provides several engines with different tradeoffs:
//!
//! - [`oracle`]: exact search over edge subsets, for small graphs and as the
//!   ground truth everything else is validated against;
//! - [`kernel`]: reduction rules that shrink an instance to a kernel whose
//!   size is bounded in terms of p and a degree-one modulator;
//! - [`fpt`]: randomized divide-and-color and a deterministic reduction to
//!   rainbow matching, both parameterized by l;
//! - [`ilp`]: an exact solver parameterized by a small vertex cover, counting
//!   interchangeable matchings instead of enumerating them;
//! - [`gadgets`]: a generator of provably hard instances from red-blue
//!   domination, with exhaustively machine-checked gadget properties.
//!
//! Shared infrastructure: [`graph`] (graphs, matchings, colorings),
//! [`matching`] (maximum matching), [`vertex_cover`], [`vizing`] (greedy
//! proper coloring with at most Δ+1 colors), [`rebalance`] (evening out
//! color class sizes), [`formats`] (text I/O), and [`budget`] (deterministic
//! work budgets with optional wall-clock deadlines).

pub mod budget;
pub mod error;
pub mod formats;
pub mod fpt;
pub mod gadgets;
pub mod graph;
pub mod ilp;
pub mod kernel;
pub mod matching;
pub mod modulator;
pub mod oracle;
pub mod precheck;
pub mod rebalance;
pub mod vertex_cover;
pub mod vizing;

pub use budget::WorkBudget;
pub use error::{EckError, Result};
pub use graph::{
    verify_coloring, EdgeColoring, Graph, LabeledGraph, Matching, MecsInstance, MecsSolution,
};

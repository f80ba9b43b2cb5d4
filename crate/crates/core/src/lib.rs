//! Leaf functions of induced subtrees.
//!
//! For a simple graph `G` on `n` vertices, the leaf function `L_G(i)` is the
//! largest number of leaves of an induced subtree of `G` with exactly `i`
//! vertices (impossible when no such subtree exists). This crate computes it
//! with a pruned branch-and-bound for arbitrary graphs ([`bb`]) and a
//! polynomial dynamic program for trees ([`tree_dp`]), and ships the brute
//! force and closed forms used to check both.

pub mod bb;
pub mod closed_forms;
pub mod config;
pub mod graph;
pub mod leaf_function;
pub mod oracle;
pub mod potential;
pub mod tree_dp;

pub use bb::{
    enumerate_induced_subtrees, leaf_function_bb, SearchStats, Solution, SolveError, SolveOptions,
};
pub use closed_forms::{closed_form, hypercube_table, lattice_leaf_value, Lattice};
pub use config::{Color, ConfigError, Configuration};
pub use graph::{Family, Graph, GraphError, LisInstance, VertexId};
pub use leaf_function::{LeafCount, LeafFunction};
pub use tree_dp::{leaf_function_tree, TreeDpError};

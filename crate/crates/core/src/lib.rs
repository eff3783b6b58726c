//! Finite graphic matroids through graph frameworks.
//!
//! A matroid is graphic exactly when it carries a *graph framework*: a
//! signing of its circuits and cocircuits together with cyclic orders on the
//! circuits and side functions on the cocircuits satisfying four local
//! conditions. This crate builds matroids from circuit families, searches
//! for frameworks, reconstructs the realizing multigraph from one, and
//! computes the bridge partition tree of a circuit.

pub mod bridges;
pub mod corpus;
pub mod cyclic;
pub mod elemset;
pub mod framework;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod realizer;
pub mod signing;

pub use elemset::ElemSet;
pub use framework::{find_framework, verify_framework, GraphFramework};
pub use graph::Multigraph;
pub use matroid::{build_matroid, Matroid, MatroidError};

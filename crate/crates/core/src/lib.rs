//! Exact solver for graph pebbling and its singular variant on small graphs.
//!
//! A pebbling move takes two pebbles off one vertex and puts one of them on a
//! neighbor. Classical pebbling asks for at least one pebble on a target
//! vertex; singular pebbling asks for exactly one. This crate decides both
//! questions for single configurations, computes the pebbling number and the
//! singular pebbling number of a graph exactly, and sweeps all small
//! connected graphs to compare the two.

pub mod cli;
pub mod error;
pub mod game;
pub mod graph;
pub mod report;
pub mod solver;

pub use error::{Error, Result};
pub use game::{Configuration, GoalMode, Move};
pub use graph::{Graph, VertexId};
pub use solver::{ExtendedCount, SolveResult};

//! Chance-constrained optimization with evolutionary multi-objective
//! algorithms.
//!
//! Every solution is scored by its expected cost `μ` and variance `v`. For a
//! confidence level `α` the chance-constrained objective is
//! `g = μ + K_α·sqrt(v)`, and each `α` selects a point on the lower-left
//! convex hull of the `(μ, v)` front. The crate provides the problem models,
//! the hull machinery, the search algorithms, exact reference oracles, and an
//! experiment harness.

pub mod algorithms;
pub mod error;
pub mod harness;
pub mod hull;
pub mod lambda;
pub mod model;
pub mod normal;
pub mod oracles;
pub mod problems;
pub mod rng;
pub mod solution;

pub use algorithms::{decode_alpha, Archive, Member, Outcome, RunConfig, RunResult};
pub use error::{Error, Result};
pub use model::{Confidence, ObjectiveVector, StochItem};
pub use problems::{
    BiObjective, DominatingSetInstance, Evaluated, Graph, Penalized, SingleObjective,
    SpanningTreeInstance, UniformInstance,
};
pub use rng::SplitMix64;
pub use solution::Solution;

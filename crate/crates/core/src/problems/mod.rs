//! Problem models and their penalized fitness functions.
//!
//! Every formulation ranks any feasible solution strictly ahead of any
//! infeasible one, in both the scalar and the bi-objective form.

mod domset;
mod graph;
mod spanning;
mod uniform;
mod union_find;

pub use domset::DominatingSetInstance;
pub use graph::Graph;
pub use spanning::{count_components, SpanningTreeInstance};
pub use uniform::UniformInstance;
pub use union_find::UnionFind;

use crate::model::{Confidence, ObjectiveVector};
use crate::solution::Solution;

/// Bi-objective value of a search point and whether it is feasible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluated {
    pub objectives: ObjectiveVector,
    pub feasible: bool,
}

/// A penalized `(μ, v)` formulation over bitstrings.
pub trait BiObjective: Sync {
    fn ground_size(&self) -> usize;
    fn evaluate(&self, x: &Solution) -> Evaluated;
}

/// A penalized scalar formulation over bitstrings (minimized).
pub trait SingleObjective: Sync {
    fn ground_size(&self) -> usize;
    fn fitness(&self, x: &Solution) -> f64;
    fn is_feasible(&self, x: &Solution) -> bool;
}

/// A problem bound to a confidence level, giving its scalar penalty fitness.
#[derive(Debug, Clone, Copy)]
pub struct Penalized<'a, P> {
    pub problem: &'a P,
    pub conf: Confidence,
}

impl<'a, P> Penalized<'a, P> {
    pub fn new(problem: &'a P, conf: Confidence) -> Self {
        Penalized { problem, conf }
    }
}

impl BiObjective for UniformInstance {
    fn ground_size(&self) -> usize {
        self.len()
    }

    fn evaluate(&self, x: &Solution) -> Evaluated {
        Evaluated {
            objectives: self.objectives(x),
            feasible: x.count_ones() >= self.k(),
        }
    }
}

impl BiObjective for SpanningTreeInstance {
    fn ground_size(&self) -> usize {
        self.graph().n_edges()
    }

    fn evaluate(&self, x: &Solution) -> Evaluated {
        let objectives = self.objectives(x);
        Evaluated {
            objectives,
            feasible: self.is_feasible(x),
        }
    }
}

impl BiObjective for DominatingSetInstance {
    fn ground_size(&self) -> usize {
        self.n_vertices()
    }

    fn evaluate(&self, x: &Solution) -> Evaluated {
        Evaluated {
            objectives: self.objectives(x),
            feasible: self.is_feasible(x),
        }
    }
}

impl SingleObjective for Penalized<'_, UniformInstance> {
    fn ground_size(&self) -> usize {
        self.problem.len()
    }

    fn fitness(&self, x: &Solution) -> f64 {
        self.problem.penalized_fitness(x, &self.conf)
    }

    fn is_feasible(&self, x: &Solution) -> bool {
        self.problem.is_feasible(x)
    }
}

impl SingleObjective for Penalized<'_, DominatingSetInstance> {
    fn ground_size(&self) -> usize {
        self.problem.n_vertices()
    }

    fn fitness(&self, x: &Solution) -> f64 {
        self.problem.penalized_fitness(x, &self.conf)
    }

    fn is_feasible(&self, x: &Solution) -> bool {
        self.problem.is_feasible(x)
    }
}

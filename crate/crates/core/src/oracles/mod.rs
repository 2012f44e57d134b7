//! Reference solvers used to check the search heuristics.

mod brute;
mod extreme;
mod greedy;
mod mann_whitney;

pub use brute::{
    brute_force_front, brute_force_optimum, extreme_points_of_front, pareto_front,
    BruteForceFront, ENUMERATION_LIMIT,
};
pub use extreme::{extreme_point_set, ExtremePoint, ExtremePointSet, OracleInstance};
pub use greedy::{greedy_uniform, greedy_uniform_with, kruskal_lambda, kruskal_with};
pub use mann_whitney::{mann_whitney_u, MannWhitney};

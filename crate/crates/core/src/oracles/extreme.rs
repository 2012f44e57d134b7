use super::greedy::{greedy_uniform_with, kruskal_with};
use crate::error::Result;
use crate::lambda::{exact_int, lambda_set, LambdaSet};
use crate::model::ObjectiveVector;
use crate::problems::{SpanningTreeInstance, UniformInstance};
use crate::solution::Solution;

/// Instances with a polynomial per-`λ` oracle.
#[derive(Debug, Clone, Copy)]
pub enum OracleInstance<'a> {
    Uniform(&'a UniformInstance),
    SpanningTree(&'a SpanningTreeInstance),
}

impl<'a> From<&'a UniformInstance> for OracleInstance<'a> {
    fn from(inst: &'a UniformInstance) -> Self {
        OracleInstance::Uniform(inst)
    }
}

impl<'a> From<&'a SpanningTreeInstance> for OracleInstance<'a> {
    fn from(inst: &'a SpanningTreeInstance) -> Self {
        OracleInstance::SpanningTree(inst)
    }
}

impl OracleInstance<'_> {
    pub fn lambda_set(&self) -> LambdaSet {
        match self {
            OracleInstance::Uniform(inst) => lambda_set(inst.items()),
            OracleInstance::SpanningTree(inst) => lambda_set(inst.weights()),
        }
    }

    fn objectives(&self, x: &Solution) -> ObjectiveVector {
        match self {
            OracleInstance::Uniform(inst) => inst.objectives(x),
            OracleInstance::SpanningTree(inst) => inst.objectives(x),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremePoint {
    /// A weighting at which this point is the maximal-variance optimum.
    pub lambda: f64,
    pub objectives: ObjectiveVector,
    pub solution: Solution,
}

/// Extreme points of the feasible region, by increasing variance.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExtremePointSet {
    pub points: Vec<ExtremePoint>,
}

impl ExtremePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn objectives(&self) -> Vec<ObjectiveVector> {
        self.points.iter().map(|p| p.objectives).collect()
    }
}

pub(crate) fn same_point(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    let integral = [a.mu, a.var, b.mu, b.var]
        .iter()
        .all(|x| exact_int(*x).is_some());
    if integral {
        a == b
    } else {
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0);
        close(a.mu, b.mu) && close(a.var, b.var)
    }
}

/// Runs the greedy (or Kruskal) oracle at every weighting in `Λ` and keeps
/// the distinct objective vectors.
pub fn extreme_point_set<'a>(inst: impl Into<OracleInstance<'a>>) -> Result<ExtremePointSet> {
    let inst = inst.into();
    let lambdas = inst.lambda_set();
    let mut points: Vec<ExtremePoint> = Vec::new();
    for weighting in lambdas.weightings() {
        let solution = match inst {
            OracleInstance::Uniform(u) => greedy_uniform_with(u, &weighting)?,
            OracleInstance::SpanningTree(s) => kruskal_with(s, &weighting)?,
        };
        let objectives = inst.objectives(&solution);
        if !points.iter().any(|p| same_point(&p.objectives, &objectives)) {
            points.push(ExtremePoint {
                lambda: weighting.lambda(),
                objectives,
                solution,
            });
        }
    }
    points.sort_by(|a, b| a.objectives.var.total_cmp(&b.objectives.var));
    Ok(ExtremePointSet { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::StochItem;

    #[test]
    fn comparable_items_give_single_point() {
        let items = [(1.0, 1.0), (2.0, 2.0), (3.0, 5.0), (4.0, 6.0)]
            .iter()
            .map(|&(m, v)| StochItem::new(m, v).unwrap())
            .collect();
        let inst = UniformInstance::new(items, 2).unwrap();
        let set = extreme_point_set(&inst).unwrap();
        assert_eq!(set.objectives(), vec![ObjectiveVector::new(3.0, 3.0)]);
    }

    #[test]
    fn sorted_by_variance() {
        let items = [(5.0, 1.0), (1.0, 5.0), (3.0, 3.0)]
            .iter()
            .map(|&(m, v)| StochItem::new(m, v).unwrap())
            .collect();
        let inst = UniformInstance::new(items, 1).unwrap();
        let set = extreme_point_set(&inst).unwrap();
        // (3, 3) lies on the segment between the other two.
        assert_eq!(
            set.objectives(),
            vec![ObjectiveVector::new(5.0, 1.0), ObjectiveVector::new(1.0, 5.0)]
        );
    }
}

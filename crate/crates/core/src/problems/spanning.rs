use crate::error::{Error, Result};
use crate::model::{ObjectiveVector, StochItem};
use crate::problems::graph::Graph;
use crate::problems::union_find::UnionFind;
use crate::solution::Solution;

/// Number of connected components of `(V, {e : x_e = 1})`.
pub fn count_components(graph: &Graph, x: &Solution) -> usize {
    assert_eq!(x.len(), graph.n_edges(), "solution length does not match edge count");
    let mut uf = UnionFind::new(graph.n_vertices());
    for e in x.iter_ones() {
        let (u, v) = graph.edges()[e];
        uf.union(u, v);
    }
    uf.count()
}

/// Chance-constrained spanning tree on a connected graph with stochastic
/// edge weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTreeInstance {
    graph: Graph,
    weights: Vec<StochItem>,
    w_ub: f64,
}

impl SpanningTreeInstance {
    pub fn new(graph: Graph, weights: Vec<StochItem>) -> Result<Self> {
        if weights.len() != graph.n_edges() {
            return Err(Error::domain(format!(
                "{} edge weights for {} edges",
                weights.len(),
                graph.n_edges()
            )));
        }
        if graph.n_edges() == 0 {
            return Err(Error::domain("spanning-tree instance has no edges"));
        }
        if !graph.is_connected() {
            return Err(Error::domain("spanning-tree instance graph is disconnected"));
        }
        let mu_max = weights.iter().map(StochItem::mu).fold(0.0, f64::max);
        let var_max = weights.iter().map(StochItem::var).fold(0.0, f64::max);
        let n = graph.n_vertices() as f64;
        Ok(SpanningTreeInstance {
            w_ub: n * n * mu_max.max(var_max),
            graph,
            weights,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[StochItem] {
        &self.weights
    }

    /// `w_ub = n²·max{μ_max, v_max}`, charged per extra component.
    pub fn w_ub(&self) -> f64 {
        self.w_ub
    }

    pub fn is_feasible(&self, x: &Solution) -> bool {
        count_components(&self.graph, x) == 1
    }

    pub fn objectives(&self, x: &Solution) -> ObjectiveVector {
        let penalty = (count_components(&self.graph, x) - 1) as f64 * self.w_ub;
        let (m, v) = x.iter_ones().fold((0.0, 0.0), |(m, v), e| {
            (m + self.weights[e].mu(), v + self.weights[e].var())
        });
        ObjectiveVector::new(penalty + m, penalty + v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> SpanningTreeInstance {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let w = [(5.0, 1.0), (2.0, 4.0), (3.0, 2.0)]
            .iter()
            .map(|&(m, v)| StochItem::new(m, v).unwrap())
            .collect();
        SpanningTreeInstance::new(g, w).unwrap()
    }

    #[test]
    fn component_examples() {
        let inst = triangle();
        assert_eq!(count_components(inst.graph(), &Solution::zeros(3)), 3);
        assert_eq!(
            count_components(inst.graph(), &Solution::from_bits(vec![true, true, false])),
            1
        );
        let two = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_components(&two, &Solution::ones(2)), 2);
    }

    #[test]
    fn penalty_uses_w_ub() {
        let inst = triangle();
        assert_eq!(inst.w_ub(), 45.0);
        let all_zero = inst.objectives(&Solution::zeros(3));
        assert_eq!(all_zero, ObjectiveVector::new(90.0, 90.0));
        let tree = inst.objectives(&Solution::from_bits(vec![true, true, false]));
        assert_eq!(tree, ObjectiveVector::new(7.0, 5.0));
        let full = inst.objectives(&Solution::ones(3));
        assert_eq!(full, ObjectiveVector::new(10.0, 7.0));
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let w = vec![StochItem::new(1.0, 1.0).unwrap(); 2];
        assert!(SpanningTreeInstance::new(g, w).is_err());
    }
}

use crate::error::{Error, Result};
use crate::model::{g_value, Confidence, ObjectiveVector, StochItem};
use crate::problems::graph::Graph;
use crate::solution::Solution;

const WORD: usize = 64;

/// Stochastic minimum-weight dominating set: each vertex carries a weight.
#[derive(Debug, Clone, PartialEq)]
pub struct DominatingSetInstance {
    graph: Graph,
    weights: Vec<StochItem>,
    /// Closed neighbourhood `N[u]` of every vertex as a bitset.
    closed: Vec<Vec<u64>>,
    sum_mu: f64,
    sum_var: f64,
}

impl DominatingSetInstance {
    pub fn new(graph: Graph, weights: Vec<StochItem>) -> Result<Self> {
        let n = graph.n_vertices();
        if weights.len() != n {
            return Err(Error::domain(format!(
                "{} vertex weights for {n} vertices",
                weights.len()
            )));
        }
        let words = n.div_ceil(WORD);
        let closed = (0..n)
            .map(|u| {
                let mut set = vec![0u64; words];
                set[u / WORD] |= 1 << (u % WORD);
                for &w in graph.neighbors(u) {
                    set[w / WORD] |= 1 << (w % WORD);
                }
                set
            })
            .collect();
        Ok(DominatingSetInstance {
            sum_mu: weights.iter().map(StochItem::mu).sum(),
            sum_var: weights.iter().map(StochItem::var).sum(),
            graph,
            weights,
            closed,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[StochItem] {
        &self.weights
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    /// Vertices neither selected nor adjacent to a selected vertex.
    pub fn undominated_count(&self, x: &Solution) -> usize {
        assert_eq!(
            x.len(),
            self.n_vertices(),
            "solution length does not match vertex count"
        );
        let words = self.n_vertices().div_ceil(WORD);
        let mut dominated = vec![0u64; words];
        for u in x.iter_ones() {
            for (d, c) in dominated.iter_mut().zip(&self.closed[u]) {
                *d |= c;
            }
        }
        let covered: usize = dominated.iter().map(|w| w.count_ones() as usize).sum();
        self.n_vertices() - covered
    }

    pub fn is_feasible(&self, x: &Solution) -> bool {
        self.undominated_count(x) == 0
    }

    /// `L_dom = 1 + Σμ(u) + K_α·(Σv(u))^½`.
    pub fn penalty_unit(&self, conf: &Confidence) -> f64 {
        1.0 + self.sum_mu + conf.k_alpha() * self.sum_var.sqrt()
    }

    pub fn penalty_mu(&self) -> f64 {
        1.0 + self.sum_mu
    }

    pub fn penalty_var(&self) -> f64 {
        1.0 + self.sum_var
    }

    fn sums(&self, x: &Solution) -> (f64, f64) {
        x.iter_ones().fold((0.0, 0.0), |(m, v), u| {
            (m + self.weights[u].mu(), v + self.weights[u].var())
        })
    }

    pub fn penalized_fitness(&self, x: &Solution, conf: &Confidence) -> f64 {
        match self.undominated_count(x) {
            0 => {
                let (m, v) = self.sums(x);
                g_value(m, v, conf)
            }
            missing => missing as f64 * self.penalty_unit(conf),
        }
    }

    pub fn objectives(&self, x: &Solution) -> ObjectiveVector {
        match self.undominated_count(x) {
            0 => {
                let (m, v) = self.sums(x);
                ObjectiveVector::new(m, v)
            }
            missing => {
                let missing = missing as f64;
                ObjectiveVector::new(missing * self.penalty_mu(), missing * self.penalty_var())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3(weights: [(f64, f64); 3]) -> DominatingSetInstance {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let w = weights
            .iter()
            .map(|&(m, v)| StochItem::new(m, v).unwrap())
            .collect();
        DominatingSetInstance::new(g, w).unwrap()
    }

    fn star(center: (f64, f64), leaves: usize) -> DominatingSetInstance {
        let g = Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l)).collect()).unwrap();
        let mut w = vec![StochItem::new(center.0, center.1).unwrap()];
        w.extend(std::iter::repeat_n(StochItem::new(1.0, 1.0).unwrap(), leaves));
        DominatingSetInstance::new(g, w).unwrap()
    }

    #[test]
    fn undominated_examples() {
        let inst = path3([(2.0, 1.0); 3]);
        assert_eq!(inst.undominated_count(&Solution::ones(3)), 0);
        assert_eq!(inst.undominated_count(&Solution::zeros(3)), 3);
        let s = star((4.0, 9.0), 5);
        assert_eq!(s.undominated_count(&Solution::from_indices(6, [0])), 0);
        assert_eq!(s.undominated_count(&Solution::from_indices(6, [1])), 4);
    }

    #[test]
    fn fitness_examples() {
        let k1 = Confidence::from_k_alpha(1.0).unwrap();
        let inst = path3([(2.0, 1.0); 3]);
        let expected = 3.0 * (1.0 + 6.0 + 3f64.sqrt());
        assert!((inst.penalized_fitness(&Solution::zeros(3), &k1) - expected).abs() < 1e-12);
        let s = star((4.0, 9.0), 3);
        assert_eq!(s.penalized_fitness(&Solution::from_indices(4, [0]), &k1), 7.0);
        assert_eq!(
            s.objectives(&Solution::from_indices(4, [0])),
            ObjectiveVector::new(4.0, 9.0)
        );
    }

    #[test]
    fn wide_graph_bitsets() {
        // More than one word of vertices.
        let n = 130;
        let g = Graph::new(n, (1..n).map(|l| (0, l)).collect()).unwrap();
        let inst =
            DominatingSetInstance::new(g, vec![StochItem::new(1.0, 1.0).unwrap(); n]).unwrap();
        assert_eq!(inst.undominated_count(&Solution::from_indices(n, [0])), 0);
        assert_eq!(inst.undominated_count(&Solution::from_indices(n, [129])), n - 2);
    }
}

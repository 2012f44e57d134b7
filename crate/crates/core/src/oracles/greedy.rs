use crate::error::{Error, Result};
use crate::lambda::Weighting;
use crate::problems::{SpanningTreeInstance, UnionFind, UniformInstance};
use crate::solution::Solution;

fn check_lambda(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::domain(format!("weighting {lambda} outside [0, 1]")))
    }
}

/// The `k` items first in the greedy order of `weighting`.
pub fn greedy_uniform_with(inst: &UniformInstance, weighting: &Weighting) -> Result<Solution> {
    let items = inst.items();
    if inst.k() > items.len() {
        return Err(Error::domain("k exceeds the number of items"));
    }
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&i, &j| weighting.compare_items(&items[i], &items[j]).then(i.cmp(&j)));
    Ok(Solution::from_indices(items.len(), order.into_iter().take(inst.k())))
}

/// A `k`-subset minimizing `f_λ`, of maximal variance among the minimizers.
pub fn greedy_uniform(inst: &UniformInstance, lambda: f64) -> Result<Solution> {
    check_lambda(lambda)?;
    greedy_uniform_with(inst, &Weighting::from_lambda(lambda))
}

/// Kruskal's algorithm over edges in the greedy order of `weighting`.
pub fn kruskal_with(inst: &SpanningTreeInstance, weighting: &Weighting) -> Result<Solution> {
    let graph = inst.graph();
    let weights = inst.weights();
    let mut order: Vec<usize> = (0..graph.n_edges()).collect();
    order.sort_by(|&i, &j| weighting.compare_items(&weights[i], &weights[j]).then(i.cmp(&j)));
    let mut uf = UnionFind::new(graph.n_vertices());
    let mut tree = Solution::zeros(graph.n_edges());
    for e in order {
        let (u, v) = graph.edges()[e];
        if uf.union(u, v) {
            tree.set(e, true);
        }
    }
    if uf.count() != 1 {
        return Err(Error::domain("graph is disconnected"));
    }
    Ok(tree)
}

/// A spanning tree minimizing `f_λ`, of maximal variance among the minimizers.
pub fn kruskal_lambda(inst: &SpanningTreeInstance, lambda: f64) -> Result<Solution> {
    check_lambda(lambda)?;
    kruskal_with(inst, &Weighting::from_lambda(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ObjectiveVector, StochItem};
    use crate::problems::Graph;

    fn items(raw: &[(f64, f64)]) -> Vec<StochItem> {
        raw.iter().map(|&(m, v)| StochItem::new(m, v).unwrap()).collect()
    }

    #[test]
    fn endpoints_pick_smallest_component() {
        let inst = UniformInstance::new(items(&[(4.0, 1.0), (1.0, 4.0), (2.0, 3.0), (3.0, 2.0)]), 2)
            .unwrap();
        assert_eq!(greedy_uniform(&inst, 1.0).unwrap(), Solution::from_indices(4, [1, 2]));
        assert_eq!(greedy_uniform(&inst, 0.0).unwrap(), Solution::from_indices(4, [0, 3]));
        assert!(greedy_uniform(&inst, 1.5).is_err());
    }

    #[test]
    fn triangle_trees() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst =
            SpanningTreeInstance::new(g, items(&[(1.0, 9.0), (2.0, 4.0), (3.0, 1.0)])).unwrap();
        let t1 = kruskal_lambda(&inst, 1.0).unwrap();
        assert_eq!(t1, Solution::from_indices(3, [0, 1]));
        assert_eq!(inst.objectives(&t1), ObjectiveVector::new(3.0, 13.0));
        let t0 = kruskal_lambda(&inst, 0.0).unwrap();
        assert_eq!(t0, Solution::from_indices(3, [1, 2]));
        assert_eq!(inst.objectives(&t0), ObjectiveVector::new(5.0, 5.0));
        assert_eq!(kruskal_lambda(&inst, 0.3).unwrap().count_ones(), 2);
    }
}

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph with 0-indexed vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects out-of-range endpoints, self-loops and repeated edges.
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::domain("graph has no vertices"));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); n_vertices];
        for &(u, v) in &edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) out of range for {n_vertices} vertices"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::domain(format!("repeated edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Graph {
            n_vertices,
            edges,
            adjacency,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    /// Connected components of the whole graph, by breadth-first search.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n_vertices];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n_vertices {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Graph::new(0, vec![]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.degree(1), 1);
    }
}

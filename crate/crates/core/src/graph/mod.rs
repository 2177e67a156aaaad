//! Simple undirected graphs on vertices `0..n`.

pub mod cluster;
pub mod edgelist;
pub mod generators;
pub mod structure;

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph with sorted adjacency lists.
///
/// Construction rejects self-loops and out-of-range endpoints and silently
/// merges parallel edges. Disconnected graphs can be built (the edge-list
/// reader needs them to report a useful error), but every analysis entry point
/// calls [`Graph::require_connected`] first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges, `|E|`.
    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Breadth-first distances from `source`; unreachable vertices are `None`.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Component label for every vertex; labels are `0..components`.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n()];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().0 == 1
    }

    /// Rejects graphs that no invariant in this crate is defined for: fewer
    /// than two vertices, or more than one component.
    pub fn require_connected(&self) -> Result<()> {
        if self.n() < 2 {
            return Err(Error::TooSmall {
                n: self.n(),
                min: 2,
            });
        }
        let (components, _) = self.components();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(())
    }

    /// Degree multiset as `(degree, multiplicity)` pairs in increasing degree.
    pub fn degree_multiset(&self) -> Vec<(usize, usize)> {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for d in degrees {
            match out.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.is_connected());
        assert_eq!(g.regular_degree(), Some(1));
    }

    #[test]
    fn path_degrees() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn duplicates_merge_and_isolated_vertices_are_rejected_later() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(
            g.require_connected(),
            Err(Error::Disconnected { components: 3 })
        );
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn single_vertex_is_too_small() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.require_connected(), Err(Error::TooSmall { n: 1, min: 2 }));
    }

    #[test]
    fn multiset() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.degree_multiset(), vec![(1, 3), (3, 1)]);
    }
}

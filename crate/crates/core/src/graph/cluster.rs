//! The cluster `G1{G2}`: one copy of `G2` glued by its root onto every vertex
//! of `G1`.
//!
//! Labels: backbone vertices keep `G1`'s labels `0..n1`. The copy hanging off
//! backbone vertex `c` occupies `n1 + c(n2-1) .. n1 + (c+1)(n2-1)`, holding the
//! non-root vertices of `G2` in increasing order.

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterSpec {
    pub g1: Graph,
    pub g2: Graph,
    /// Vertex of `g2` identified with each backbone vertex.
    pub root: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// A vertex of `G1`.
    Backbone,
    /// A non-root vertex of the copy of `G2` glued at `contact`; `original`
    /// is its label in `G2`.
    Interior { contact: usize, original: usize },
}

#[derive(Debug, Clone)]
pub struct Cluster {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub n1: usize,
    pub n2: usize,
}

impl Cluster {
    /// The backbone vertex a vertex hangs off (itself, for backbone vertices).
    pub fn contact(&self, v: usize) -> usize {
        match self.roles[v] {
            VertexRole::Backbone => v,
            VertexRole::Interior { contact, .. } => contact,
        }
    }

    /// Label in the cluster of vertex `original` of the copy glued at `contact`.
    pub fn label(&self, contact: usize, original: usize, root: usize) -> usize {
        if original == root {
            contact
        } else {
            let offset = if original < root {
                original
            } else {
                original - 1
            };
            self.n1 + contact * (self.n2 - 1) + offset
        }
    }
}

pub fn cluster(spec: &ClusterSpec) -> Result<Cluster> {
    let ClusterSpec { g1, g2, root } = spec;
    let root = *root;
    g1.require_connected()?;
    g2.require_connected()?;
    let (n1, n2) = (g1.n(), g2.n());
    if root >= n2 {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: n2,
        });
    }

    let interior = n2 - 1;
    let n = n1 * n2;
    let mut roles = vec![VertexRole::Backbone; n];
    let label = |contact: usize, v: usize| -> usize {
        if v == root {
            contact
        } else {
            n1 + contact * interior + if v < root { v } else { v - 1 }
        }
    };

    let mut edges = g1.edges();
    edges.reserve(n1 * g2.m());
    let g2_edges = g2.edges();
    for contact in 0..n1 {
        for v in (0..n2).filter(|&v| v != root) {
            roles[label(contact, v)] = VertexRole::Interior {
                contact,
                original: v,
            };
        }
        edges.extend(
            g2_edges
                .iter()
                .map(|&(u, v)| (label(contact, u), label(contact, v))),
        );
    }

    Ok(Cluster {
        graph: Graph::from_edges(n, &edges)?,
        roles,
        n1,
        n2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, path};

    fn build(g1: Graph, g2: Graph, root: usize) -> Cluster {
        cluster(&ClusterSpec { g1, g2, root }).unwrap()
    }

    #[test]
    fn k2_of_k2_is_p4() {
        let c = build(complete(2).unwrap(), complete(2).unwrap(), 0);
        assert_eq!((c.graph.n(), c.graph.m()), (4, 3));
        let mut degrees = c.graph.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
        assert!(c.graph.is_connected());
        // backbone edge 0-1, pendants 0-2 and 1-3
        assert_eq!(c.graph.edges(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn k3_of_k3_counts_and_degrees() {
        let c = build(complete(3).unwrap(), complete(3).unwrap(), 0);
        assert_eq!((c.graph.n(), c.graph.m()), (9, 12));
        for v in 0..9 {
            let expected = if v < 3 { 4 } else { 2 };
            assert_eq!(c.graph.degree(v), expected);
        }
    }

    #[test]
    fn c4_of_k2_counts() {
        let c = build(cycle(4).unwrap(), complete(2).unwrap(), 1);
        assert_eq!((c.graph.n(), c.graph.m()), (8, 8));
    }

    #[test]
    fn roles_and_labels_agree() {
        let c = build(cycle(4).unwrap(), path(3).unwrap(), 1);
        for v in 0..c.graph.n() {
            match c.roles[v] {
                VertexRole::Backbone => assert!(v < 4),
                VertexRole::Interior { contact, original } => {
                    assert_eq!(c.label(contact, original, 1), v);
                    assert_eq!(c.contact(v), contact);
                }
            }
        }
        // middle of the path is the root: both ends hang directly off the backbone
        assert_eq!(c.graph.degree(0), 4);
    }

    #[test]
    fn rejects_bad_inputs() {
        let k2 = complete(2).unwrap();
        let lone = Graph::from_edges(1, &[]).unwrap();
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let spec = |g1: &Graph, g2: &Graph, root| ClusterSpec {
            g1: g1.clone(),
            g2: g2.clone(),
            root,
        };
        assert!(matches!(
            cluster(&spec(&k2, &lone, 0)),
            Err(Error::TooSmall { .. })
        ));
        assert!(matches!(
            cluster(&spec(&split, &k2, 0)),
            Err(Error::Disconnected { .. })
        ));
        assert!(matches!(
            cluster(&spec(&k2, &k2, 2)),
            Err(Error::VertexOutOfRange { .. })
        ));
    }
}

//! Cut edges, cut vertices, diameter and bipartiteness.

use super::Graph;
use crate::error::Result;

/// A cut edge `(u, v)` with `u < v`, plus the edge counts of the two
/// components left after removing it (`m_u` on `u`'s side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bridge {
    pub u: usize,
    pub v: usize,
    pub m_u: usize,
    pub m_v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Sorted by `(u, v)`.
    pub bridges: Vec<Bridge>,
    /// Sorted ascending.
    pub articulation_points: Vec<usize>,
    pub diameter: usize,
    pub is_bipartite: bool,
    pub regular_degree: Option<usize>,
}

pub fn structure(g: &Graph) -> Result<StructureReport> {
    g.require_connected()?;
    let (bridge_edges, articulation_points) = low_link(g);
    let bridges = bridge_edges
        .into_iter()
        .map(|(u, v)| {
            let m_u = side_edge_count(g, u, (u, v));
            Bridge {
                u,
                v,
                m_u,
                m_v: g.m() - 1 - m_u,
            }
        })
        .collect();
    Ok(StructureReport {
        bridges,
        articulation_points,
        diameter: diameter(g),
        is_bipartite: is_bipartite(g),
        regular_degree: g.regular_degree(),
    })
}

/// Iterative Tarjan low-link over a single DFS tree rooted at 0.
fn low_link(g: &Graph) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut counter = 0;

    // (vertex, index of next neighbour to scan)
    let mut stack = vec![(0usize, 0usize)];
    order[0] = 0;
    low[0] = 0;
    counter += 1;
    let mut root_children = 0;

    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if let Some(&v) = g.neighbors(u).get(*next) {
            *next += 1;
            if order[v] == usize::MAX {
                parent[v] = u;
                order[v] = counter;
                low[v] = counter;
                counter += 1;
                if u == 0 {
                    root_children += 1;
                }
                stack.push((v, 0));
            } else if v != parent[u] {
                low[u] = low[u].min(order[v]);
            }
        } else {
            stack.pop();
            let p = parent[u];
            if p != usize::MAX {
                low[p] = low[p].min(low[u]);
                if low[u] > order[p] {
                    bridges.push((p.min(u), p.max(u)));
                }
                if p != 0 && low[u] >= order[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    is_cut[0] = root_children > 1;
    bridges.sort_unstable();
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (bridges, cuts)
}

/// Edges reachable from `start` without crossing `removed`.
fn side_edge_count(g: &Graph, start: usize, removed: (usize, usize)) -> usize {
    let blocked = |a: usize, b: usize| (a.min(b), a.max(b)) == removed;
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut degree_sum = 0;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if blocked(u, v) {
                continue;
            }
            degree_sum += 1;
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    degree_sum / 2
}

/// Exact diameter by breadth-first search from every vertex.
pub fn diameter(g: &Graph) -> usize {
    (0..g.n())
        .map(|s| g.bfs_distances(s).into_iter().flatten().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// Breadth-first 2-colouring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u] == Some(true);
            for &v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

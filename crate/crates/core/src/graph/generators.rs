//! Canonically labelled instances of the standard graph families.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `complete n`
    Complete,
    /// `complete_bipartite a b`: parts `0..a` and `a..a+b`.
    CompleteBipartite,
    /// `path n`: `n` vertices, `n - 1` edges.
    Path,
    /// `cycle n`
    Cycle,
    /// `star k`: centre 0 joined to `k` leaves.
    Star,
    /// `barbell a b c`: `K_a` and `K_c` joined by a path of `b` edges.
    Barbell,
    /// `conjoined_polygons k n`: `k` copies of `C_n` sharing vertex 0.
    ConjoinedPolygons,
    /// `friendship k`: `k` triangles sharing vertex 0.
    Friendship,
    /// `hypercube d`
    Hypercube,
    /// `petersen`
    Petersen,
    /// `random n percent seed`: a random spanning tree plus each remaining
    /// pair independently with probability `percent / 100`.
    Random,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Barbell,
        Family::ConjoinedPolygons,
        Family::Friendship,
        Family::Hypercube,
        Family::Petersen,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Barbell => "barbell",
            Family::ConjoinedPolygons => "conjoined_polygons",
            Family::Friendship => "friendship",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
            Family::Random => "random",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::Complete
            | Family::Path
            | Family::Cycle
            | Family::Star
            | Family::Friendship
            | Family::Hypercube => 1,
            Family::CompleteBipartite | Family::ConjoinedPolygons => 2,
            Family::Barbell | Family::Random => 3,
        }
    }

    pub fn build(self, params: &[usize]) -> Result<Graph> {
        if params.len() != self.arity() {
            return Err(Error::bad_params(
                self.name(),
                format!("expected {} parameters, got {}", self.arity(), params.len()),
            ));
        }
        let at_least = |value: usize, min: usize, what: &str| {
            if value < min {
                Err(Error::bad_params(
                    self.name(),
                    format!("{what} must be at least {min}, got {value}"),
                ))
            } else {
                Ok(value)
            }
        };
        match self {
            Family::Complete => complete(at_least(params[0], 2, "n")?),
            Family::CompleteBipartite => {
                complete_bipartite(at_least(params[0], 1, "a")?, at_least(params[1], 1, "b")?)
            }
            Family::Path => path(at_least(params[0], 2, "n")?),
            Family::Cycle => cycle(at_least(params[0], 3, "n")?),
            Family::Star => star(at_least(params[0], 1, "k")?),
            Family::Barbell => barbell(
                at_least(params[0], 2, "a")?,
                at_least(params[1], 1, "b")?,
                at_least(params[2], 2, "c")?,
            ),
            Family::ConjoinedPolygons => {
                conjoined_polygons(at_least(params[0], 2, "k")?, at_least(params[1], 3, "n")?)
            }
            Family::Friendship => conjoined_polygons(at_least(params[0], 1, "k")?, 3),
            Family::Hypercube => {
                let d = at_least(params[0], 1, "d")?;
                if d > 16 {
                    return Err(Error::bad_params(self.name(), "d must be at most 16"));
                }
                hypercube(d)
            }
            Family::Petersen => petersen(),
            Family::Random => {
                let n = at_least(params[0], 2, "n")?;
                if params[1] > 100 {
                    return Err(Error::bad_params(
                        self.name(),
                        "percent must be at most 100",
                    ));
                }
                random_connected(n, params[1] as f64 / 100.0, params[2] as u64)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Looks up `family` by name and builds it from `params`.
pub fn generate(family: &str, params: &[usize]) -> Result<Graph> {
    family.parse::<Family>()?.build(params)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn star(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges)
}

/// `K_a` on `0..a`, path interior on the next `b - 1` labels, `K_c` last.
/// The path runs from vertex `a - 1` to the first vertex of `K_c`.
pub fn barbell(a: usize, b: usize, c: usize) -> Result<Graph> {
    let n = a + (b - 1) + c;
    let mut edges = Vec::new();
    for u in 0..a {
        for v in u + 1..a {
            edges.push((u, v));
        }
    }
    let right = a + b - 1;
    for u in right..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for v in a - 1..right {
        edges.push((v, v + 1));
    }
    Graph::from_edges(n, &edges)
}

/// `k` copies of the `n`-gon sharing vertex 0; copy `j` uses labels
/// `1 + j(n-1) ..= (j+1)(n-1)` in cyclic order.
pub fn conjoined_polygons(k: usize, n: usize) -> Result<Graph> {
    let total = 1 + k * (n - 1);
    let mut edges = Vec::with_capacity(k * n);
    for j in 0..k {
        let base = 1 + j * (n - 1);
        edges.push((0, base));
        for i in 0..n - 2 {
            edges.push((base + i, base + i + 1));
        }
        edges.push((base + n - 2, 0));
    }
    Graph::from_edges(total, &edges)
}

pub fn hypercube(d: usize) -> Result<Graph> {
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |bit| (u, u ^ (1 << bit))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edges(n, &edges)
}

/// Outer 5-cycle on `0..5`, inner pentagram on `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Result<Graph> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges)
}

/// Connected random graph: a uniformly shuffled attachment tree, then every
/// other pair with probability `p`. Deterministic for a fixed `seed`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        edges.push((parent, order[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_four() {
        let g = generate("complete", &[4]).unwrap();
        assert_eq!((g.n(), g.m(), g.regular_degree()), (4, 6, Some(3)));
    }

    #[test]
    fn complete_bipartite_two_two_is_a_four_cycle() {
        let g = generate("complete_bipartite", &[2, 2]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.regular_degree(), Some(2));
        // C4 is the only connected 2-regular graph on four vertices.
        assert!(g.is_connected());
    }

    #[test]
    fn conjoined_squares() {
        let g = generate("conjoined_polygons", &[2, 4]).unwrap();
        assert_eq!((g.n(), g.m()), (7, 8));
        assert_eq!(g.degree(0), 4);
        assert!((1..7).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn barbell_counts() {
        let g = generate("barbell", &[3, 2, 4]).unwrap();
        assert_eq!(g.n(), 3 + 1 + 4);
        assert_eq!(g.m(), 3 + 2 + 6);
        assert!(g.is_connected());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen().unwrap();
        assert_eq!((g.n(), g.m(), g.regular_degree()), (10, 15, Some(3)));
    }

    #[test]
    fn hypercube_counts() {
        let g = hypercube(3).unwrap();
        assert_eq!((g.n(), g.m(), g.regular_degree()), (8, 12, Some(3)));
    }

    #[test]
    fn friendship_is_conjoined_triangles() {
        assert_eq!(
            generate("friendship", &[3]).unwrap(),
            conjoined_polygons(3, 3).unwrap()
        );
    }

    #[test]
    fn random_is_connected_and_seeded() {
        for seed in 0..20 {
            let g = random_connected(9, 0.2, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected(9, 0.2, seed).unwrap());
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            generate("wheel", &[5]),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            generate("complete", &[1]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            generate("cycle", &[2]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            generate("path", &[3, 4]),
            Err(Error::BadParams { .. })
        ));
    }

    #[test]
    fn handshake_on_every_family() {
        let cases: &[(&str, &[usize])] = &[
            ("complete", &[6]),
            ("complete_bipartite", &[2, 5]),
            ("path", &[7]),
            ("cycle", &[9]),
            ("star", &[5]),
            ("barbell", &[4, 3, 4]),
            ("conjoined_polygons", &[3, 5]),
            ("friendship", &[4]),
            ("hypercube", &[4]),
            ("petersen", &[]),
            ("random", &[11, 30, 7]),
        ];
        for (family, params) in cases {
            let g = generate(family, params).unwrap();
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m(), "{family}");
            assert!(g.is_connected(), "{family}");
        }
    }
}

#![allow(dead_code)]

use hitsym_core::graph::generators::*;
use hitsym_core::Graph;

pub fn named_families() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |name: &str, g: Graph| out.push((name.to_string(), g));
    add("K2", complete(2).unwrap());
    add("K3", complete(3).unwrap());
    add("K4", complete(4).unwrap());
    add("K6", complete(6).unwrap());
    add("K_{2,2}", complete_bipartite(2, 2).unwrap());
    add("K_{3,3}", complete_bipartite(3, 3).unwrap());
    add("K_{2,5}", complete_bipartite(2, 5).unwrap());
    add("P3", path(3).unwrap());
    add("P4", path(4).unwrap());
    add("P5", path(5).unwrap());
    add("C4", cycle(4).unwrap());
    add("C5", cycle(5).unwrap());
    add("C6", cycle(6).unwrap());
    add("star_3", star(3).unwrap());
    add("barbell_4_3_4", barbell(4, 3, 4).unwrap());
    add("conjoined_2_4", conjoined_polygons(2, 4).unwrap());
    add("friendship_3", conjoined_polygons(3, 3).unwrap());
    add("hypercube_3", hypercube(3).unwrap());
    add("petersen", petersen().unwrap());
    out
}

/// 50 seeded connected graphs on 3..=12 vertices.
pub fn random_corpus() -> Vec<(String, Graph)> {
    (0..50u64)
        .map(|seed| {
            let n = 3 + (seed as usize * 7) % 10;
            let percent = 10 + (seed * 13) % 50;
            let g = random_connected(n, percent as f64 / 100.0, 1000 + seed).unwrap();
            (format!("random_{n}_{percent}_{seed}"), g)
        })
        .collect()
}

pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut out = named_families();
    out.extend(random_corpus());
    out
}

/// Regular graphs used as cluster factors.
pub fn cluster_backbones() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", complete(2).unwrap()),
        ("K3", complete(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("Petersen", petersen().unwrap()),
    ]
}

pub fn cluster_attachments() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", complete(2).unwrap()),
        ("K3", complete(3).unwrap()),
        ("C4", cycle(4).unwrap()),
    ]
}

pub fn close(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol * (1.0 + expected.abs())
}

pub fn rel(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs()
}

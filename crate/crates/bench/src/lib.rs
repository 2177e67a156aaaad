//! Inputs shared by the criterion benchmarks.

use hitsym_core::graph::generators::{cycle, hypercube, petersen, random_connected};
use hitsym_core::Graph;

/// Named graphs of increasing size for scaling runs.
pub fn bench_graphs() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("petersen".to_string(), petersen().expect("petersen")),
        ("cycle_64".to_string(), cycle(64).expect("cycle")),
        ("hypercube_6".to_string(), hypercube(6).expect("hypercube")),
    ];
    for n in [32, 64, 128] {
        out.push((
            format!("random_{n}"),
            random_connected(n, 0.1, n as u64).expect("random"),
        ));
    }
    out
}

mod common;

use common::{cluster_attachments, cluster_backbones, rel};
use hitsym_core::formulas::verify_cluster;
use hitsym_core::graph::structure::diameter;
use hitsym_core::{cluster, ClusterSpec};

#[test]
fn counts_and_diameter_over_corpus() {
    for (_, g1) in cluster_backbones() {
        for (_, g2) in cluster_attachments() {
            for root in 0..g2.n() {
                let c = cluster(&ClusterSpec {
                    g1: g1.clone(),
                    g2: g2.clone(),
                    root,
                })
                .unwrap();
                assert_eq!(c.graph.n(), g1.n() * g2.n());
                assert_eq!(c.graph.m(), g1.m() + g1.n() * g2.m());
                assert!(diameter(&c.graph) >= diameter(&g1));
                let d1 = g1.regular_degree().unwrap();
                let d2 = g2.regular_degree().unwrap();
                for v in 0..c.graph.n() {
                    let want = if v < g1.n() { d1 + d2 } else { d2 };
                    assert_eq!(c.graph.degree(v), want);
                }
            }
        }
    }
}

#[test]
fn corrected_kemeny_kirchhoff_and_proof_identity_match_exact() {
    for (a, g1) in cluster_backbones() {
        for (b, g2) in cluster_attachments() {
            let mut per_root = Vec::new();
            for root in 0..g2.n() {
                let rep = verify_cluster(&g1, &g2, root).unwrap();
                let tag = format!("{a}{{{b}}} root {root}");
                assert!(rel(rep.k_corrected, rep.k_exact) <= 1e-7, "{tag}");
                assert!(rel(rep.r_eq13, rep.r_exact) <= 1e-7, "{tag}");
                assert!(rep.eq9_max_dev <= 1e-7, "{tag}: {}", rep.eq9_max_dev);
                // uncorrected and corrected forms coincide exactly when m1 = m2
                if rep.m1 == rep.m2 {
                    assert!(rel(rep.k_eq8, rep.k_exact) <= 1e-7, "{tag}");
                } else {
                    assert!(rel(rep.k_eq8, rep.k_exact) > 1e-3, "{tag}");
                }
                per_root.push(rep.k_exact);
            }
            // observed, not assumed: vertex-transitive attachments make the root irrelevant
            let first = per_root[0];
            assert!(
                per_root.iter().all(|k| rel(*k, first) <= 1e-9),
                "{a}{{{b}}}"
            );
        }
    }
}

#[test]
fn self_cluster_kirchhoff_relation_holds() {
    for (name, g) in cluster_backbones() {
        let rep = verify_cluster(&g, &g, 0).unwrap();
        let rows = rep.self_cluster.as_ref().expect("self rows");
        assert!(rel(rows.r_eq15, rep.r_exact) <= 1e-7, "{name}");
        assert!(rel(rows.k_self_derived, rep.k_exact) <= 1e-7, "{name}");
        assert!(rel(rows.r_self_derived, rep.r_exact) <= 1e-7, "{name}");
        // the uncorrected self-cluster forms are off by a factor depending only on n
        let n = rows.n as f64;
        let q = 3.0 * n * n + 3.0 * n + 1.0;
        let k_gap = (3.0 * n + 1.0) * (n + 1.0) / q - 1.0;
        let r_gap = 1.0 - q / ((3.0 * n + 1.0) * (n + 1.0));
        assert!(
            (rel(rows.k_eq14_paper, rep.k_exact) - k_gap).abs() <= 1e-8,
            "{name}"
        );
        assert!(
            (rel(rows.r_eq16_paper, rep.r_exact) - r_gap).abs() <= 1e-8,
            "{name}"
        );
    }
}

//! Closed forms for clusters and bounds on Kemeny's constant, each compared
//! against the exact value computed from the graph.
//!
//! Cluster formulas take scalar inputs so they can be checked on their own.
//! For `G = G1{G2}` with `m = m1 + n1 m2`:
//!
//! * uncorrected Kemeny formula: `K = (m/m1) K1 + n1 (2m - m1)/m K2`
//! * corrected Kemeny formula: `K = (m/m1) K1 + n1 (2m - m2)/m K2`
//! * Kirchhoff index: `R(G) = n2^2 R(G1) + (2 n1^2 - n1) R(G2)`
//!
//! The uncorrected and corrected Kemeny forms agree exactly when `m1 = m2`, which
//! includes every self-cluster `G1{G1}`. Elsewhere only the corrected form
//! matches the exact value; [`verify_cluster`] reports both.

use crate::error::{Error, Result};
use crate::graph::cluster::{cluster, ClusterSpec, VertexRole};
use crate::graph::structure::{diameter, is_bipartite};
use crate::graph::Graph;
use crate::invariants::{
    hitting_matrix_solve, kemeny, kemeny_from_parts, resistance_matrix, stationary,
};
use crate::spectra::walk_spectrum;
use crate::symmetry::{is_highly_symmetric, Witness};
use crate::tol;

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.to_string()))
    }
}

/// The uncorrected cluster Kemeny formula, with `2m - m1` in the second term.
pub fn cluster_kemeny_eq8(n1: usize, m1: usize, m2: usize, k1: f64, k2: f64) -> Result<f64> {
    cluster_kemeny_checked(n1, m1, m2, k1, k2)?;
    let m = (m1 + n1 * m2) as f64;
    let (n1, m1) = (n1 as f64, m1 as f64);
    Ok(m / m1 * k1 + n1 * (2.0 * m - m1) / m * k2)
}

/// The cluster Kemeny formula with `2m - m2` in the second term, which is
/// what summing `pi_i pi_j R_ij` over the cluster gives.
pub fn cluster_kemeny_corrected(n1: usize, m1: usize, m2: usize, k1: f64, k2: f64) -> Result<f64> {
    cluster_kemeny_checked(n1, m1, m2, k1, k2)?;
    let m = (m1 + n1 * m2) as f64;
    let (n1, m1, m2) = (n1 as f64, m1 as f64, m2 as f64);
    Ok(m / m1 * k1 + n1 * (2.0 * m - m2) / m * k2)
}

fn cluster_kemeny_checked(n1: usize, m1: usize, m2: usize, k1: f64, k2: f64) -> Result<()> {
    require(n1 >= 2, "n1 must be at least 2")?;
    require(m1 >= 1, "m1 must be at least 1")?;
    require(m2 >= 1, "m2 must be at least 1")?;
    require(k1 > 0.0 && k2 > 0.0, "Kemeny constants must be positive")
}

/// `R(G1{G2}) = n2^2 R(G1) + (2 n1^2 - n1) R(G2)`.
pub fn cluster_kirchhoff_eq13(n1: usize, n2: usize, r1: f64, r2: f64) -> Result<f64> {
    require(n1 >= 2 && n2 >= 2, "n1 and n2 must be at least 2")?;
    require(r1 > 0.0 && r2 > 0.0, "Kirchhoff indices must be positive")?;
    let (n1, n2) = (n1 as f64, n2 as f64);
    Ok(n2 * n2 * r1 + (2.0 * n1 * n1 - n1) * r2)
}

/// Uncorrected self-cluster Kemeny value: `(3n + 1) K1`.
pub fn self_cluster_kemeny_eq14(n: usize, k1: f64) -> f64 {
    (3 * n + 1) as f64 * k1
}

/// Self-cluster Kemeny value from the cluster formula with `m1 = m2`:
/// `(3n^2 + 3n + 1)/(n + 1) K1`.
pub fn self_cluster_kemeny_derived(n: usize, k1: f64) -> f64 {
    let n = n as f64;
    (3.0 * n * n + 3.0 * n + 1.0) / (n + 1.0) * k1
}

/// `R(G1{G1}) = n (3n - 1) R(G1)`.
pub fn self_cluster_kirchhoff_eq15(n: usize, r1: f64) -> f64 {
    (n * (3 * n - 1)) as f64 * r1
}

/// Self-cluster Kirchhoff index from the cluster's Kemeny constant, in its
/// uncorrected form: `n^2 (3n - 1) / ((3n + 1) d) K`.
pub fn self_cluster_kirchhoff_eq16(n: usize, d: usize, k: f64) -> f64 {
    let (n, d) = (n as f64, d as f64);
    n * n * (3.0 * n - 1.0) / ((3.0 * n + 1.0) * d) * k
}

/// The same relation derived from the two cluster formulas:
/// `n^2 (3n - 1)(n + 1) / ((3n^2 + 3n + 1) d) K`.
pub fn self_cluster_kirchhoff_derived(n: usize, d: usize, k: f64) -> f64 {
    let (n, d) = (n as f64, d as f64);
    n * n * (3.0 * n - 1.0) * (n + 1.0) / ((3.0 * n * n + 3.0 * n + 1.0) * d) * k
}

/// One formula evaluated against its exact counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct FormulaRow {
    pub name: &'static str,
    pub predicted: f64,
    pub exact: f64,
    pub rel_dev: f64,
}

impl FormulaRow {
    fn new(name: &'static str, predicted: f64, exact: f64) -> Self {
        FormulaRow {
            name,
            predicted,
            exact,
            rel_dev: tol::rel_dev(predicted, exact),
        }
    }
}

/// Extra rows for `G1{G1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SelfClusterRows {
    pub n: usize,
    pub d: usize,
    pub k_eq14_paper: f64,
    pub k_self_derived: f64,
    pub r_eq15: f64,
    /// Evaluated at the exact Kemeny constant of the cluster.
    pub r_eq16_paper: f64,
    /// Evaluated at the exact Kemeny constant of the cluster.
    pub r_self_derived: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusterFormulaReport {
    pub n1: usize,
    pub n2: usize,
    pub m1: usize,
    pub m2: usize,
    pub m: usize,
    pub root: usize,
    pub k1: f64,
    pub k2: f64,
    pub r1: f64,
    pub r2: f64,
    /// Kemeny constant of the built cluster, both routes checked.
    pub k_exact: f64,
    /// Kirchhoff index of the built cluster.
    pub r_exact: f64,
    pub k_eq8: f64,
    pub k_corrected: f64,
    pub r_eq13: f64,
    /// Largest relative deviation of `E_c T_d` from `(2m - m2) R_cd` over
    /// backbone vertices `c` and the interior vertices `d` hanging off them.
    pub eq9_max_dev: f64,
    pub self_cluster: Option<SelfClusterRows>,
}

impl ClusterFormulaReport {
    /// Every formula with its deviation from the exact value.
    pub fn rows(&self) -> Vec<FormulaRow> {
        let mut rows = vec![
            FormulaRow::new("k_eq8", self.k_eq8, self.k_exact),
            FormulaRow::new("k_corrected", self.k_corrected, self.k_exact),
            FormulaRow::new("r_eq13", self.r_eq13, self.r_exact),
        ];
        if let Some(s) = &self.self_cluster {
            rows.extend([
                FormulaRow::new("k_eq14_paper", s.k_eq14_paper, self.k_exact),
                FormulaRow::new("k_self_derived", s.k_self_derived, self.k_exact),
                FormulaRow::new("r_eq15", s.r_eq15, self.r_exact),
                FormulaRow::new("r_eq16_paper", s.r_eq16_paper, self.r_exact),
                FormulaRow::new("r_self_derived", s.r_self_derived, self.r_exact),
            ]);
        }
        rows
    }

    pub fn row(&self, name: &str) -> Option<FormulaRow> {
        self.rows().into_iter().find(|r| r.name == name)
    }
}

fn certify(g: &Graph) -> Result<usize> {
    let d = g.regular_degree().ok_or_else(|| Error::NotRegular {
        min: g.min_degree(),
        max: g.max_degree(),
    })?;
    let rep = is_highly_symmetric(g)?;
    if let Some(Witness::HittingPair {
        a,
        b,
        forward,
        backward,
    }) = rep.witness
    {
        return Err(Error::NotHighlySymmetric {
            a,
            b,
            forward,
            backward,
        });
    }
    Ok(d)
}

/// Builds `g1{g2}` at `root` and compares every applicable formula with the
/// exact invariants. Both inputs must be regular and highly symmetric. Rows
/// for the self-cluster relations are added when `g1 == g2`.
pub fn verify_cluster(g1: &Graph, g2: &Graph, root: usize) -> Result<ClusterFormulaReport> {
    g1.require_connected()?;
    g2.require_connected()?;
    let d1 = certify(g1)?;
    certify(g2)?;

    let k1 = kemeny(g1)?.k_eigen;
    let k2 = kemeny(g2)?.k_eigen;
    let r1 = resistance_matrix(g1)?.kirchhoff;
    let r2 = resistance_matrix(g2)?.kirchhoff;

    let built = cluster(&ClusterSpec {
        g1: g1.clone(),
        g2: g2.clone(),
        root,
    })?;
    let g = &built.graph;
    let h = hitting_matrix_solve(g)?;
    let kem = kemeny_from_parts(&walk_spectrum(g)?, &stationary(g)?, &h);
    kem.verify(tol::CROSS_ROUTE)?;
    let r = resistance_matrix(g)?;

    let (n1, n2, m1, m2, m) = (g1.n(), g2.n(), g1.m(), g2.m(), g.m());
    let weight = (2 * m - m2) as f64;
    let mut eq9_max_dev = 0.0f64;
    for (v, role) in built.roles.iter().enumerate() {
        if let VertexRole::Interior { contact, .. } = *role {
            let dev = tol::rel_dev(h.get(contact, v), weight * r.get(contact, v));
            eq9_max_dev = eq9_max_dev.max(dev);
        }
    }

    let self_cluster = (g1 == g2).then(|| SelfClusterRows {
        n: n1,
        d: d1,
        k_eq14_paper: self_cluster_kemeny_eq14(n1, k1),
        k_self_derived: self_cluster_kemeny_derived(n1, k1),
        r_eq15: self_cluster_kirchhoff_eq15(n1, r1),
        r_eq16_paper: self_cluster_kirchhoff_eq16(n1, d1, kem.k_eigen),
        r_self_derived: self_cluster_kirchhoff_derived(n1, d1, kem.k_eigen),
    });

    Ok(ClusterFormulaReport {
        n1,
        n2,
        m1,
        m2,
        m,
        root,
        k1,
        k2,
        r1,
        r2,
        k_exact: kem.k_eigen,
        r_exact: r.kirchhoff,
        k_eq8: cluster_kemeny_eq8(n1, m1, m2, k1, k2)?,
        k_corrected: cluster_kemeny_corrected(n1, m1, m2, k1, k2)?,
        r_eq13: cluster_kirchhoff_eq13(n1, n2, r1, r2)?,
        eq9_max_dev,
        self_cluster,
    })
}

/// `g1{g1}` rooted at vertex 0, with the self-cluster rows.
pub fn self_cluster_report(g1: &Graph) -> Result<ClusterFormulaReport> {
    verify_cluster(g1, g1, 0)
}

#[derive(Debug, Clone, PartialEq)]
pub enum UpperEigen {
    Applicable { value: f64, k: usize, theta: f64 },
    Inapplicable { reason: &'static str },
}

impl UpperEigen {
    pub fn value(&self) -> Option<f64> {
        match self {
            UpperEigen::Applicable { value, .. } => Some(*value),
            UpperEigen::Inapplicable { .. } => None,
        }
    }
}

/// Spectral and structural bounds on Kemeny's constant with the exact value.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSet {
    pub n: usize,
    pub k_actual: f64,
    pub lambda2: f64,
    /// `(n - 1)^2 / n`.
    pub lower_general: f64,
    /// `(2n - 3) / 2`, bipartite graphs only.
    pub lower_bipartite: Option<f64>,
    /// `sigma^2 = (1 + sum_{i>=2} lambda_i^2) / n`.
    pub sigma: f64,
    pub lower_majorization: f64,
    pub upper_eigen: UpperEigen,
    pub diameter: usize,
    /// Regular graphs only.
    pub lower_diameter: Option<f64>,
}

/// `1 / (1 + q) + (n - 2)^2 / (n - 1 - q)`, the shape shared by the
/// majorization and diameter bounds. The second term vanishes at `n = 2`.
fn majorization_shape(n: usize, q: f64) -> f64 {
    let nf = n as f64;
    let tail = if n == 2 {
        0.0
    } else {
        (nf - 2.0).powi(2) / (nf - 1.0 - q)
    };
    1.0 / (1.0 + q) + tail
}

/// Upper bound `(n - k - 2)/(1 - lambda2) + k/2 + 1/theta` with
/// `k = floor((lambda2 (n-1) + 1)/(lambda2 + 1))` and
/// `theta = lambda2 (n - k - 2) - k + 2`.
///
/// The floor is taken after a `1e-9` upward nudge so that quotients which are
/// integers in exact arithmetic do not round down.
pub fn upper_eigen_bound(n: usize, lambda2: f64) -> UpperEigen {
    if (lambda2 + 1.0).abs() <= 1e-12 {
        return UpperEigen::Inapplicable {
            reason: "lambda2 + 1 = 0",
        };
    }
    let nf = n as f64;
    let quotient = (lambda2 * (nf - 1.0) + 1.0) / (lambda2 + 1.0);
    let k = (quotient + 1e-9).floor().max(0.0) as usize;
    if k + 2 > n {
        return UpperEigen::Inapplicable {
            reason: "n - k - 2 < 0",
        };
    }
    let free = (n - k - 2) as f64;
    let theta = lambda2 * free - k as f64 + 2.0;
    if theta <= 0.0 {
        return UpperEigen::Inapplicable {
            reason: "theta <= 0",
        };
    }
    UpperEigen::Applicable {
        value: free / (1.0 - lambda2) + k as f64 / 2.0 + 1.0 / theta,
        k,
        theta,
    }
}

pub fn bounds(g: &Graph) -> Result<BoundSet> {
    let spectrum = walk_spectrum(g)?;
    let k_actual = kemeny(g)?.k_eigen;
    let n = g.n();
    let nf = n as f64;
    let lambda2 = spectrum.lambda2();

    let sigma = ((1.0 + spectrum.eigenvalues[1..].iter().map(|l| l * l).sum::<f64>()) / nf).sqrt();
    let diameter = diameter(g);
    let lower_diameter = g.regular_degree().map(|d| {
        let big_d = diameter as f64;
        majorization_shape(n, 2.0 * big_d / (d as f64 * (big_d + 1.0)))
    });

    Ok(BoundSet {
        n,
        k_actual,
        lambda2,
        lower_general: (nf - 1.0).powi(2) / nf,
        lower_bipartite: is_bipartite(g).then(|| (2.0 * nf - 3.0) / 2.0),
        sigma,
        lower_majorization: majorization_shape(n, sigma / (nf - 1.0).sqrt()),
        upper_eigen: upper_eigen_bound(n, lambda2),
        diameter,
        lower_diameter,
    })
}

impl BoundSet {
    /// Applicable lower bounds by name.
    pub fn lower_bounds(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![
            ("lower_general", self.lower_general),
            ("lower_majorization", self.lower_majorization),
        ];
        if let Some(v) = self.lower_bipartite {
            out.push(("lower_bipartite", v));
        }
        if let Some(v) = self.lower_diameter {
            out.push(("lower_diameter", v));
        }
        out
    }

    /// Bounds on the wrong side of `k_actual` by more than
    /// `rel_tol (1 + k_actual)`.
    pub fn violations(&self, rel_tol: f64) -> Vec<String> {
        let slack = rel_tol * (1.0 + self.k_actual);
        let mut out: Vec<String> = self
            .lower_bounds()
            .into_iter()
            .filter(|&(_, v)| v > self.k_actual + slack)
            .map(|(name, v)| format!("{name} = {v} exceeds K = {}", self.k_actual))
            .collect();
        if let Some(v) = self.upper_eigen.value() {
            if v < self.k_actual - slack {
                out.push(format!("upper_eigen = {v} is below K = {}", self.k_actual));
            }
        }
        out
    }
}

/// `(n/Delta) K <= R(G) <= (n/delta) K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sandwich {
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
}

impl Sandwich {
    pub fn holds(&self, rel_tol: f64) -> bool {
        let slack = rel_tol * (1.0 + self.value);
        self.lower <= self.value + slack && self.value <= self.upper + slack
    }
}

/// Evaluates the Kirchhoff sandwich and fails with an invariant violation if
/// either side is broken beyond [`tol::CROSS_ROUTE`].
pub fn sandwich_check(g: &Graph) -> Result<Sandwich> {
    let s = sandwich(g)?;
    if !s.holds(tol::CROSS_ROUTE) {
        return Err(Error::InvariantViolation(format!(
            "(n/Delta) K <= R(G) <= (n/delta) K fails: {} <= {} <= {}",
            s.lower, s.value, s.upper
        )));
    }
    Ok(s)
}

/// The sandwich triple without checking it.
pub fn sandwich(g: &Graph) -> Result<Sandwich> {
    let k = kemeny(g)?.k_eigen;
    let value = resistance_matrix(g)?.kirchhoff;
    let n = g.n() as f64;
    Ok(Sandwich {
        lower: n / g.max_degree() as f64 * k,
        value,
        upper: n / g.min_degree() as f64 * k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{
        complete, complete_bipartite, cycle, path, petersen, random_connected, star,
    };

    fn near(a: f64, b: f64, t: f64) -> bool {
        (a - b).abs() <= t * (1.0 + b.abs())
    }

    #[test]
    fn cluster_kemeny_examples() {
        assert!(near(
            cluster_kemeny_eq8(2, 1, 1, 0.5, 0.5).unwrap(),
            19.0 / 6.0,
            1e-14
        ));
        assert!(near(
            cluster_kemeny_eq8(3, 3, 3, 4.0 / 3.0, 4.0 / 3.0).unwrap(),
            37.0 / 3.0,
            1e-14
        ));
        // C4{K2}: uncorrected form gives 5 + 3 = 8; the exact value is 8.75
        assert!(near(
            cluster_kemeny_eq8(4, 4, 1, 2.5, 0.5).unwrap(),
            8.0,
            1e-14
        ));
        assert!(near(
            cluster_kemeny_corrected(4, 4, 1, 2.5, 0.5).unwrap(),
            8.75,
            1e-14
        ));
        assert!(cluster_kemeny_eq8(2, 0, 1, 0.5, 0.5).is_err());
    }

    #[test]
    fn cluster_kirchhoff_examples() {
        assert!(near(
            cluster_kirchhoff_eq13(2, 2, 1.0, 1.0).unwrap(),
            10.0,
            1e-14
        ));
        assert!(near(
            cluster_kirchhoff_eq13(3, 3, 2.0, 2.0).unwrap(),
            48.0,
            1e-14
        ));
        assert!(near(
            cluster_kirchhoff_eq13(4, 2, 5.0, 1.0).unwrap(),
            48.0,
            1e-14
        ));
        assert!(cluster_kirchhoff_eq13(1, 2, 1.0, 1.0).is_err());
    }

    #[test]
    fn self_cluster_k2() {
        let rep = self_cluster_report(&complete(2).unwrap()).unwrap();
        assert!(near(rep.k_exact, 19.0 / 6.0, 1e-12));
        assert!(near(rep.r_exact, 10.0, 1e-12));
        let s = rep.self_cluster.as_ref().unwrap();
        assert!(near(s.k_eq14_paper, 3.5, 1e-14));
        assert!(near(s.r_eq15, 10.0, 1e-12));
        let eq14 = rep.row("k_eq14_paper").unwrap();
        assert!((eq14.rel_dev - (3.5 / (19.0 / 6.0) - 1.0)).abs() < 1e-12);
        assert!(eq14.rel_dev > 0.1);
        assert!(rep.row("k_self_derived").unwrap().rel_dev <= 1e-8);
        assert!(rep.row("r_eq16_paper").unwrap().rel_dev > 0.05);
        assert!(rep.row("r_self_derived").unwrap().rel_dev <= 1e-8);
    }

    #[test]
    fn self_cluster_k3_and_c4() {
        let rep = self_cluster_report(&complete(3).unwrap()).unwrap();
        assert!(near(rep.self_cluster.as_ref().unwrap().r_eq15, 48.0, 1e-12));
        assert!(near(rep.r_exact, 48.0, 1e-10));
        assert!(near(rep.k_exact, 37.0 / 3.0, 1e-10));

        let rep = self_cluster_report(&cycle(4).unwrap()).unwrap();
        let s = rep.self_cluster.as_ref().unwrap();
        assert!(near(s.r_eq15, 220.0, 1e-12));
        // (3*16 + 12 + 1)/5 * 5/2 = 61/5 * 5/2
        assert!(near(s.k_self_derived, 30.5, 1e-12));
        assert!(near(rep.k_exact, 30.5, 1e-9));
    }

    #[test]
    fn rejects_irregular_and_asymmetric_inputs() {
        let err = verify_cluster(&path(3).unwrap(), &complete(2).unwrap(), 0).unwrap_err();
        assert_eq!(err, Error::NotRegular { min: 1, max: 2 });
        // regular but not highly symmetric: cubic graph with uneven triangles
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 6),
                (0, 7),
                (1, 3),
                (1, 7),
                (2, 4),
                (2, 5),
                (2, 7),
                (3, 4),
                (3, 6),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        assert!(matches!(
            verify_cluster(&g, &complete(2).unwrap(), 0),
            Err(Error::NotHighlySymmetric { .. })
        ));
    }

    #[test]
    fn c4_of_k2_against_exact() {
        let rep = verify_cluster(&cycle(4).unwrap(), &complete(2).unwrap(), 0).unwrap();
        assert!(near(rep.k_exact, 8.75, 1e-10));
        assert!(near(rep.r_exact, 48.0, 1e-10));
        assert!(rep.row("k_corrected").unwrap().rel_dev <= 1e-8);
        assert!(rep.row("r_eq13").unwrap().rel_dev <= 1e-8);
        assert!(rep.eq9_max_dev <= 1e-7);
        assert!(rep.self_cluster.is_none());
    }

    #[test]
    fn k4_bounds_are_tight() {
        let b = bounds(&complete(4).unwrap()).unwrap();
        for (name, v) in b.lower_bounds() {
            assert!((v - 2.25).abs() <= 1e-9, "{name} = {v}");
        }
        assert!((b.sigma * b.sigma - 1.0 / 3.0).abs() < 1e-12);
        match b.upper_eigen {
            UpperEigen::Applicable { value, k, theta } => {
                assert_eq!(k, 0);
                assert!((theta - 4.0 / 3.0).abs() < 1e-12);
                assert!((value - 2.25).abs() <= 1e-9);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(b.diameter, 1);
        assert!(b.lower_bipartite.is_none());
    }

    #[test]
    fn bipartite_bound() {
        let b = bounds(&complete_bipartite(2, 2).unwrap()).unwrap();
        assert!((b.lower_bipartite.unwrap() - 2.5).abs() < 1e-12);
        assert!((b.k_actual - 2.5).abs() < 1e-12);
        let b = bounds(&path(4).unwrap()).unwrap();
        assert!((b.lower_general - 2.25).abs() < 1e-12);
        assert!((b.lower_bipartite.unwrap() - 2.5).abs() < 1e-12);
        assert!((b.k_actual - 19.0 / 6.0).abs() < 1e-12);
        assert!(b.lower_diameter.is_none());
    }

    #[test]
    fn k2_upper_bound_is_inapplicable() {
        let b = bounds(&complete(2).unwrap()).unwrap();
        assert_eq!(
            b.upper_eigen,
            UpperEigen::Inapplicable {
                reason: "lambda2 + 1 = 0"
            }
        );
        assert!(b.violations(1e-8).is_empty());
    }

    #[test]
    fn bounds_hold_on_random_graphs() {
        for seed in 0..50 {
            let g = random_connected(12, 0.25, seed).unwrap();
            assert!(bounds(&g).unwrap().violations(1e-8).is_empty());
        }
        for g in [star(6).unwrap(), petersen().unwrap(), cycle(9).unwrap()] {
            assert!(bounds(&g).unwrap().violations(1e-8).is_empty());
        }
    }

    #[test]
    fn sandwich_examples() {
        let s = sandwich_check(&complete(4).unwrap()).unwrap();
        assert!(
            near(s.lower, 3.0, 1e-12) && near(s.value, 3.0, 1e-12) && near(s.upper, 3.0, 1e-12)
        );
        let s = sandwich_check(&path(4).unwrap()).unwrap();
        assert!(near(s.lower, 19.0 / 3.0, 1e-12));
        assert!(near(s.value, 10.0, 1e-12));
        assert!(near(s.upper, 38.0 / 3.0, 1e-12));
        let s = sandwich_check(&cycle(4).unwrap()).unwrap();
        assert!(near(s.lower, 5.0, 1e-12) && near(s.upper, 5.0, 1e-12));
    }
}

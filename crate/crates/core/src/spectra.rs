//! Dense kernels: the walk spectrum, the Laplacian pseudoinverse and linear
//! solves. Everything is double precision and goes through nalgebra.
//!
//! The transition matrix `P = D^-1 A` is not symmetric, but it is similar to
//! `D^-1/2 A D^-1/2`, which is. Its eigenvalues are always taken from the
//! symmetric form so they come out real and well conditioned.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tol;

const EIGEN_MAX_ITER: usize = 10_000;

/// Eigenvalues of the random-walk transition matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Second-largest eigenvalue.
    pub fn lambda2(&self) -> f64 {
        self.eigenvalues[1]
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// `L = Diag(deg) - A`.
pub fn laplacian(g: &Graph) -> DMatrix<f64> {
    let mut l = -adjacency_matrix(g);
    for v in 0..g.n() {
        l[(v, v)] = g.degree(v) as f64;
    }
    l
}

/// `P = Diag(deg)^-1 A`; row `v` is uniform over the neighbours of `v`.
pub fn transition_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut p = DMatrix::zeros(n, n);
    for u in 0..n {
        let w = 1.0 / g.degree(u) as f64;
        for &v in g.neighbors(u) {
            p[(u, v)] = w;
        }
    }
    p
}

/// `D^-1/2 A D^-1/2`, similar to the transition matrix.
pub fn normalized_adjacency(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let inv_sqrt: Vec<f64> = g
        .degrees()
        .iter()
        .map(|&d| 1.0 / (d as f64).sqrt())
        .collect();
    let mut s = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        let w = inv_sqrt[u] * inv_sqrt[v];
        s[(u, v)] = w;
        s[(v, u)] = w;
    }
    s
}

fn symmetric_eigen(
    m: DMatrix<f64>,
    context: impl FnOnce() -> String,
) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::EigenFailure {
            context: format!("{} (non-finite input)", context()),
        });
    }
    SymmetricEigen::try_new(m, f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::EigenFailure { context: context() })
}

fn describe(g: &Graph) -> String {
    format!("graph with n = {}, m = {}", g.n(), g.m())
}

pub fn walk_spectrum(g: &Graph) -> Result<Spectrum> {
    g.require_connected()?;
    let eig = symmetric_eigen(normalized_adjacency(g), || {
        format!("walk spectrum of {}", describe(g))
    })?;
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));

    let top = eigenvalues[0];
    if (top - 1.0).abs() > tol::STRUCTURAL
        || eigenvalues.iter().any(|&l| l.abs() > 1.0 + tol::STRUCTURAL)
    {
        return Err(Error::EigenFailure {
            context: format!(
                "walk spectrum of {} left [-1, 1] or missed 1 (top = {top})",
                describe(g)
            ),
        });
    }
    Ok(Spectrum { eigenvalues })
}

/// Moore-Penrose pseudoinverse of the Laplacian, assembled from its
/// eigendecomposition with eigenvalues below `1e-10 * lambda_max` treated as
/// zero. A connected graph has exactly one such eigenvalue.
pub fn laplacian_pinv(g: &Graph) -> Result<DMatrix<f64>> {
    g.require_connected()?;
    let n = g.n();
    let eig = symmetric_eigen(laplacian(g), || format!("Laplacian of {}", describe(g)))?;
    let lambda_max = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
    let cutoff = tol::PINV_CUTOFF * lambda_max;

    let mut pinv = DMatrix::zeros(n, n);
    let mut zero_modes = 0;
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda.abs() <= cutoff {
            zero_modes += 1;
            continue;
        }
        let v = eig.eigenvectors.column(k);
        pinv.ger(1.0 / lambda, &v, &v, 1.0);
    }
    if zero_modes != 1 {
        return Err(Error::EigenFailure {
            context: format!(
                "Laplacian of {} has {zero_modes} numerically zero eigenvalues",
                describe(g)
            ),
        });
    }
    // symmetrise away the rank-one accumulation noise
    let pinv = (&pinv + pinv.transpose()) * 0.5;
    Ok(pinv)
}

/// Solves `a x = b` by partial-pivot LU and checks the residual
/// `|a x - b|_inf <= 1e-8 (1 + |b|_inf)`. `system` names the system in errors.
pub fn solve_linear(a: &DMatrix<f64>, b: &DVector<f64>, system: &str) -> Result<DVector<f64>> {
    let singular = || Error::Singular {
        system: system.to_string(),
    };
    if !a.is_square() || a.nrows() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "{system}: {}x{} matrix with a right-hand side of length {}",
            a.nrows(),
            a.ncols(),
            b.len()
        )));
    }
    let x = a.clone().lu().solve(b).ok_or_else(singular)?;
    if x.iter().any(|v| !v.is_finite()) {
        return Err(singular());
    }
    let residual = (a * &x - b).amax();
    if residual > tol::CROSS_ROUTE * (1.0 + b.amax()) {
        return Err(singular());
    }
    Ok(x)
}

//! Exact random-walk and resistance invariants.
//!
//! Hitting times are computed two ways: by solving the first-step equations
//! for each target ([`hitting_matrix_solve`]) and from effective resistances
//! through `E_a T_b = 1/2 sum_v deg(v) (R_ab + R_vb - R_va)`
//! ([`hitting_matrix_resistance`]). Kemeny's constant likewise comes from the
//! walk spectrum and from stationary-weighted hitting times at every start.
//! [`simulate_hitting`] is a seeded Monte Carlo estimate used as a third check.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{laplacian_pinv, solve_linear, transition_matrix, walk_spectrum, Spectrum};
use crate::tol;

/// Stationary distribution of the simple random walk, `pi_i = deg(i) / 2m`.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    pub pi: Vec<f64>,
}

pub fn stationary(g: &Graph) -> Result<StationaryDistribution> {
    g.require_connected()?;
    let two_m = 2.0 * g.m() as f64;
    let pi: Vec<f64> = g.degrees().iter().map(|&d| d as f64 / two_m).collect();

    let row = DVector::from_vec(pi.clone()).transpose();
    let drift = (&row * transition_matrix(g) - &row).amax();
    if drift > 1e-12 {
        return Err(Error::InvariantViolation(format!(
            "pi P != pi (max deviation {drift:e})"
        )));
    }
    Ok(StationaryDistribution { pi })
}

/// `h[(a, b)] = E_a T_b`, the expected number of steps from `a` to first hit
/// `b`. The diagonal is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct HittingMatrix {
    pub h: DMatrix<f64>,
}

impl HittingMatrix {
    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.h[(a, b)]
    }

    pub fn n(&self) -> usize {
        self.h.nrows()
    }

    /// Largest entrywise difference from `other`.
    pub fn max_abs_diff(&self, other: &HittingMatrix) -> f64 {
        (&self.h - &other.h).amax()
    }
}

/// Solves `h(b) = 0`, `h(a) = 1 + mean_{v ~ a} h(v)` once per target `b`.
pub fn hitting_matrix_solve(g: &Graph) -> Result<HittingMatrix> {
    g.require_connected()?;
    let n = g.n();
    let mut h = DMatrix::zeros(n, n);
    let ones = DVector::from_element(n - 1, 1.0);
    let index = |v: usize, target: usize| if v < target { v } else { v - 1 };

    for target in 0..n {
        let mut system = DMatrix::identity(n - 1, n - 1);
        for a in (0..n).filter(|&a| a != target) {
            let w = 1.0 / g.degree(a) as f64;
            for &v in g.neighbors(a) {
                if v != target {
                    system[(index(a, target), index(v, target))] -= w;
                }
            }
        }
        let x = solve_linear(&system, &ones, &format!("hitting times to vertex {target}"))?;
        for a in (0..n).filter(|&a| a != target) {
            h[(a, target)] = x[index(a, target)];
        }
    }
    Ok(HittingMatrix { h })
}

/// Hitting times from effective resistances. Satisfies
/// `h[a][b] + h[b][a] = 2m R_ab` identically.
pub fn hitting_matrix_resistance(g: &Graph, r: &ResistanceMatrix) -> HittingMatrix {
    let n = g.n();
    let m = g.m() as f64;
    // w[b] = sum_v deg(v) R_vb
    let w: Vec<f64> = (0..n)
        .map(|b| (0..n).map(|v| g.degree(v) as f64 * r.get(v, b)).sum())
        .collect();
    let h = DMatrix::from_fn(n, n, |a, b| {
        if a == b {
            0.0
        } else {
            m * r.get(a, b) + 0.5 * (w[b] - w[a])
        }
    });
    HittingMatrix { h }
}

/// Effective resistances with unit resistors on every edge.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    pub r: DMatrix<f64>,
    /// Kirchhoff index `sum_{i<j} R_ij`.
    pub kirchhoff: f64,
    /// `n * trace(L+)`, the second route to the Kirchhoff index.
    pub kirchhoff_trace: f64,
    /// `R(i) = sum_j R_ij`.
    pub row_sums: Vec<f64>,
}

impl ResistanceMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.r[(i, j)]
    }

    pub fn n(&self) -> usize {
        self.r.nrows()
    }
}

/// `R_ij = L+_ii + L+_jj - 2 L+_ij`.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    let pinv = laplacian_pinv(g)?;
    let n = g.n();
    let r = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else {
            pinv[(i, i)] + pinv[(j, j)] - 2.0 * pinv[(i, j)]
        }
    });
    let mut kirchhoff = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            kirchhoff += r[(i, j)];
        }
    }
    let row_sums = (0..n).map(|i| r.row(i).sum()).collect();
    Ok(ResistanceMatrix {
        kirchhoff,
        kirchhoff_trace: n as f64 * pinv.trace(),
        row_sums,
        r,
    })
}

/// Kemeny's constant by two routes.
#[derive(Debug, Clone, PartialEq)]
pub struct KemenyResult {
    /// `sum_{j>=2} 1 / (1 - lambda_j)` over the walk spectrum.
    pub k_eigen: f64,
    /// Mean over start vertices of `sum_j pi_j E_i T_j`.
    pub k_hitting: f64,
    /// `sum_j pi_j E_i T_j` for each start `i`.
    pub per_start: Vec<f64>,
    /// `max_i |per_start[i] - k_hitting|`.
    pub max_start_spread: f64,
}

impl KemenyResult {
    /// Checks route agreement and start-vertex constancy at relative `tol`.
    pub fn verify(&self, tol: f64) -> Result<()> {
        if !tol::close(self.k_hitting, self.k_eigen, tol) {
            return Err(Error::InvariantViolation(format!(
                "Kemeny routes disagree: eigen {} vs hitting {}",
                self.k_eigen, self.k_hitting
            )));
        }
        if self.max_start_spread > tol * (1.0 + self.k_hitting) {
            return Err(Error::InvariantViolation(format!(
                "Kemeny constant depends on the start vertex (spread {:e})",
                self.max_start_spread
            )));
        }
        Ok(())
    }
}

pub fn kemeny_from_spectrum(spectrum: &Spectrum) -> f64 {
    spectrum.eigenvalues[1..]
        .iter()
        .map(|l| 1.0 / (1.0 - l))
        .sum()
}

/// Both Kemeny routes from precomputed pieces, without checking them.
pub fn kemeny_from_parts(
    spectrum: &Spectrum,
    pi: &StationaryDistribution,
    h: &HittingMatrix,
) -> KemenyResult {
    let n = h.n();
    let per_start: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| pi.pi[j] * h.get(i, j)).sum())
        .collect();
    let k_hitting = per_start.iter().sum::<f64>() / n as f64;
    let max_start_spread = per_start
        .iter()
        .map(|k| (k - k_hitting).abs())
        .fold(0.0, f64::max);
    KemenyResult {
        k_eigen: kemeny_from_spectrum(spectrum),
        k_hitting,
        per_start,
        max_start_spread,
    }
}

/// Both Kemeny routes, unchecked.
pub fn kemeny_routes(g: &Graph) -> Result<KemenyResult> {
    let spectrum = walk_spectrum(g)?;
    let pi = stationary(g)?;
    let h = hitting_matrix_solve(g)?;
    Ok(kemeny_from_parts(&spectrum, &pi, &h))
}

/// Kemeny's constant, failing if the two routes disagree or the hitting
/// route depends on the start vertex beyond [`tol::CROSS_ROUTE`].
pub fn kemeny(g: &Graph) -> Result<KemenyResult> {
    let result = kemeny_routes(g)?;
    result.verify(tol::CROSS_ROUTE)?;
    Ok(result)
}

/// Walks longer than this are abandoned and counted in
/// [`HittingEstimate::capped_trials`].
pub const STEP_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct HittingEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(trials)`.
    pub stderr: f64,
    pub trials: u64,
    /// Walks that reached the step cap; their length is recorded as the cap.
    pub capped_trials: u64,
}

/// Monte Carlo estimate of `E_a T_b`.
///
/// Trial `t` draws from ChaCha8 seeded with `seed` on stream `t`, so every
/// trial is reproducible on its own and the accumulation (Welford, in trial
/// order) is deterministic.
pub fn simulate_hitting(
    g: &Graph,
    a: usize,
    b: usize,
    trials: u64,
    seed: u64,
) -> Result<HittingEstimate> {
    simulate_hitting_capped(g, a, b, trials, seed, STEP_CAP)
}

pub(crate) fn simulate_hitting_capped(
    g: &Graph,
    a: usize,
    b: usize,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<HittingEstimate> {
    g.require_connected()?;
    for v in [a, b] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    if a == b {
        return Err(Error::InvalidArgument(
            "start and target of a hitting walk must differ".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "at least one trial is required".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mean = 0.0;
    let mut m2 = 0.0;
    let mut capped_trials = 0;
    for trial in 0..trials {
        rng.set_stream(trial);
        rng.set_word_pos(0);
        let mut v = a;
        let mut steps = 0u64;
        while v != b && steps < cap {
            let nbrs = g.neighbors(v);
            v = nbrs[rng.random_range(0..nbrs.len())];
            steps += 1;
        }
        if v != b {
            capped_trials += 1;
        }
        let x = steps as f64;
        let delta = x - mean;
        mean += delta / (trial + 1) as f64;
        m2 += delta * (x - mean);
    }
    let stderr = if trials > 1 {
        (m2 / (trials - 1) as f64).sqrt() / (trials as f64).sqrt()
    } else {
        0.0
    };
    Ok(HittingEstimate {
        mean,
        stderr,
        trials,
        capped_trials,
    })
}

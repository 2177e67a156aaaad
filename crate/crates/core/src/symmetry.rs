//! Hitting-time symmetry and related graph classes.
//!
//! A graph is *highly symmetric* when `E_a T_b = E_b T_a` for every pair.
//! [`is_highly_symmetric`] decides this directly from the hitting matrix.
//! [`screen_necessary_conditions`] applies three cheap necessary conditions
//! (no two cut edges, balanced cut edges, no resistance-regular cut vertex);
//! it can reject but never certify.
//!
//! Walk-regularity (closed-walk counts `diag(A^k)` constant for all `k >= 2`)
//! is checked for `k = 2..=n` only: by Cayley-Hamilton every higher power of
//! `A` is a linear combination of `A^0 .. A^(n-1)`, so constant diagonals up
//! to `n` force them for all `k`.

use crate::error::{Error, Result};
use crate::graph::structure::structure;
use crate::graph::Graph;
use crate::invariants::{hitting_matrix_solve, resistance_matrix, HittingMatrix, ResistanceMatrix};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    HighlySymmetric,
    NotHighlySymmetric,
}

/// Necessary conditions for hitting-time symmetry on graphs with cut
/// vertices or cut edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScreenRule {
    /// A cut vertex whose resistances to all its neighbours are equal.
    ResistanceRegularCutVertex,
    /// A cut edge whose two sides have different edge counts.
    UnbalancedCutEdge,
    /// Two or more cut edges.
    TwoCutEdges,
}

impl ScreenRule {
    /// Roman-numeral id of the condition: `ii`, `iii` or `iv`.
    pub fn id(self) -> &'static str {
        match self {
            ScreenRule::ResistanceRegularCutVertex => "ii",
            ScreenRule::UnbalancedCutEdge => "iii",
            ScreenRule::TwoCutEdges => "iv",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// `forward = E_a T_b`, `backward = E_b T_a`.
    HittingPair {
        a: usize,
        b: usize,
        forward: f64,
        backward: f64,
    },
    Vertex {
        rule: ScreenRule,
        vertex: usize,
    },
    Edge {
        rule: ScreenRule,
        u: usize,
        v: usize,
        /// Edge counts of the two sides for an unbalanced cut edge, and of the
        /// first cut edge for [`ScreenRule::TwoCutEdges`].
        sides: (usize, usize),
    },
}

/// Checks that only hold on a certified highly symmetric graph.
#[derive(Debug, Clone, PartialEq)]
pub struct HsExtras {
    /// `max |E_a T_b - m R_ab| / (m R_ab)` over pairs.
    pub hitting_vs_resistance: f64,
    /// Relative spread of the resistance row sums `R(i)`.
    pub row_sum_spread: f64,
    /// `max_i |R(G) - n R(i) / 2| / R(G)`.
    pub kirchhoff_vs_row_sum: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HsReport {
    pub verdict: Verdict,
    /// Present exactly when the verdict is negative.
    pub witness: Option<Witness>,
    /// True when only the screener ran; a positive screener verdict means
    /// "not excluded", not "certified".
    pub screener_only: bool,
    /// Largest `|E_a T_b - E_b T_a|`; absent for screener-only reports.
    pub max_asymmetry: Option<f64>,
    pub extras: Option<HsExtras>,
}

impl HsReport {
    pub fn is_highly_symmetric(&self) -> bool {
        self.verdict == Verdict::HighlySymmetric
    }

    pub fn rule(&self) -> Option<ScreenRule> {
        match self.witness {
            Some(Witness::Vertex { rule, .. }) | Some(Witness::Edge { rule, .. }) => Some(rule),
            _ => None,
        }
    }
}

/// Direct test at the default tolerance [`tol::HITTING`].
pub fn is_highly_symmetric(g: &Graph) -> Result<HsReport> {
    is_highly_symmetric_with(g, tol::HITTING)
}

/// Direct test: symmetric when `max |h_ab - h_ba| <= rel_tol (1 + max h)`.
///
/// On a positive verdict also checks `E_a T_b = m R_ab` and that `R(i)` is
/// constant with `R(G) = n R(i) / 2`; a failure of those is an
/// [`Error::InvariantViolation`].
pub fn is_highly_symmetric_with(g: &Graph, rel_tol: f64) -> Result<HsReport> {
    let h = hitting_matrix_solve(g)?;
    let report = hitting_symmetry(&h, rel_tol);
    if !report.is_highly_symmetric() {
        return Ok(report);
    }
    let r = resistance_matrix(g)?;
    let extras = hs_extras(g, &h, &r);
    if extras.hitting_vs_resistance > rel_tol {
        return Err(Error::InvariantViolation(format!(
            "highly symmetric graph with E_aT_b != m R_ab (relative deviation {:e})",
            extras.hitting_vs_resistance
        )));
    }
    let row_tol = rel_tol.min(tol::CROSS_ROUTE);
    if extras.row_sum_spread > row_tol || extras.kirchhoff_vs_row_sum > row_tol {
        return Err(Error::InvariantViolation(format!(
            "highly symmetric graph with non-constant R(i) (spread {:e})",
            extras.row_sum_spread
        )));
    }
    Ok(HsReport {
        extras: Some(extras),
        ..report
    })
}

/// The symmetry decision on a precomputed hitting matrix, without extras.
pub fn hitting_symmetry(h: &HittingMatrix, rel_tol: f64) -> HsReport {
    let n = h.n();
    let mut worst = (0.0, 0, 0);
    let mut largest = 0.0f64;
    for a in 0..n {
        for b in a + 1..n {
            let gap = (h.get(a, b) - h.get(b, a)).abs();
            largest = largest.max(h.get(a, b)).max(h.get(b, a));
            if gap > worst.0 {
                worst = (gap, a, b);
            }
        }
    }
    let (gap, a, b) = worst;
    let symmetric = gap <= rel_tol * (1.0 + largest);
    HsReport {
        verdict: if symmetric {
            Verdict::HighlySymmetric
        } else {
            Verdict::NotHighlySymmetric
        },
        witness: (!symmetric).then(|| Witness::HittingPair {
            a,
            b,
            forward: h.get(a, b),
            backward: h.get(b, a),
        }),
        screener_only: false,
        max_asymmetry: Some(gap),
        extras: None,
    }
}

pub fn hs_extras(g: &Graph, h: &HittingMatrix, r: &ResistanceMatrix) -> HsExtras {
    let n = g.n();
    let m = g.m() as f64;
    let mut hitting_vs_resistance = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            if a != b {
                hitting_vs_resistance =
                    hitting_vs_resistance.max(tol::rel_dev(h.get(a, b), m * r.get(a, b)));
            }
        }
    }
    let mean = r.row_sums.iter().sum::<f64>() / n as f64;
    let row_sum_spread = r
        .row_sums
        .iter()
        .map(|&s| tol::rel_dev(s, mean))
        .fold(0.0, f64::max);
    let kirchhoff_vs_row_sum = r
        .row_sums
        .iter()
        .map(|&s| tol::rel_dev(n as f64 * s / 2.0, r.kirchhoff))
        .fold(0.0, f64::max);
    HsExtras {
        hitting_vs_resistance,
        row_sum_spread,
        kirchhoff_vs_row_sum,
    }
}

/// Vertices whose resistances to all their neighbours agree within
/// [`tol::RESISTANCE_REGULAR`]. Degree-1 vertices qualify vacuously.
pub fn resistance_regular_vertices(g: &Graph, r: &ResistanceMatrix) -> Vec<usize> {
    (0..g.n())
        .filter(|&i| is_resistance_regular(g, r, i))
        .collect()
}

fn is_resistance_regular(g: &Graph, r: &ResistanceMatrix, i: usize) -> bool {
    let mut values = g.neighbors(i).iter().map(|&j| r.get(i, j));
    let Some(first) = values.next() else {
        return true;
    };
    values.all(|x| (x - first).abs() <= tol::RESISTANCE_REGULAR)
}

/// Cheap necessary conditions, checked in the order: two cut edges, an
/// unbalanced cut edge, a resistance-regular cut vertex. `K2` is exempt from
/// the cut-edge rules. The report is always `screener_only`.
pub fn screen_necessary_conditions(g: &Graph) -> Result<HsReport> {
    let s = structure(g)?;
    let reject = |witness: Witness| HsReport {
        verdict: Verdict::NotHighlySymmetric,
        witness: Some(witness),
        screener_only: true,
        max_asymmetry: None,
        extras: None,
    };
    let trivial = g.n() == 2;

    if s.bridges.len() >= 2 {
        let b = s.bridges[0];
        return Ok(reject(Witness::Edge {
            rule: ScreenRule::TwoCutEdges,
            u: b.u,
            v: b.v,
            sides: (b.m_u, b.m_v),
        }));
    }
    if let Some(b) = s.bridges.first().filter(|b| !trivial && b.m_u != b.m_v) {
        return Ok(reject(Witness::Edge {
            rule: ScreenRule::UnbalancedCutEdge,
            u: b.u,
            v: b.v,
            sides: (b.m_u, b.m_v),
        }));
    }
    if !s.articulation_points.is_empty() {
        let r = resistance_matrix(g)?;
        if let Some(&vertex) = s
            .articulation_points
            .iter()
            .find(|&&v| is_resistance_regular(g, &r, v))
        {
            return Ok(reject(Witness::Vertex {
                rule: ScreenRule::ResistanceRegularCutVertex,
                vertex,
            }));
        }
    }
    Ok(HsReport {
        verdict: Verdict::HighlySymmetric,
        witness: None,
        screener_only: true,
        max_asymmetry: None,
        extras: None,
    })
}

/// Largest relative deviation of `1 + mean_{j ~ i} E_j T_i` (the expected
/// return time to `i`) from `2m / deg(i)`, over all vertices.
pub fn check_return_time_identity(g: &Graph) -> Result<f64> {
    let h = hitting_matrix_solve(g)?;
    Ok(return_time_deviation(g, &h))
}

pub fn return_time_deviation(g: &Graph, h: &HittingMatrix) -> f64 {
    let two_m = 2.0 * g.m() as f64;
    (0..g.n())
        .map(|i| {
            let d = g.degree(i) as f64;
            let ret = 1.0 + g.neighbors(i).iter().map(|&j| h.get(j, i)).sum::<f64>() / d;
            tol::rel_dev(ret, two_m / d)
        })
        .fold(0.0, f64::max)
}

/// How the closed-walk counts were compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkArithmetic {
    /// Exact 128-bit integers throughout.
    Exact,
    /// Counts overflowed at power `from_k`; from there on they were compared
    /// modulo [`WALK_PRIMES`].
    Modular { from_k: usize },
}

/// Two primes above 2^30 used when exact counts overflow.
pub const WALK_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkRegularity {
    pub walk_regular: bool,
    /// Smallest `k` where `diag(A^k)` is not constant.
    pub failure_k: Option<usize>,
    pub arithmetic: WalkArithmetic,
}

pub fn walk_regularity(g: &Graph) -> Result<WalkRegularity> {
    g.require_connected()?;
    Ok(diagonal_scan(g, i128::MAX))
}

/// Scans `diag(A^k)` for `k = 2..=n`. Entries above `limit` trigger the
/// modular fallback; tests lower `limit` to exercise it.
pub(crate) fn diagonal_scan(g: &Graph, limit: i128) -> WalkRegularity {
    let n = g.n();
    // walks[i][j] = number of k-walks from i to j, starting at k = 1
    let mut walks: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut row = vec![0; n];
            for &j in g.neighbors(i) {
                row[j] = 1;
            }
            row
        })
        .collect();

    for k in 2..=n.max(2) {
        let mut next = vec![vec![0i128; n]; n];
        let mut overflow = false;
        'rows: for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for &l in g.neighbors(j) {
                    match acc.checked_add(walks[i][l]) {
                        Some(v) if v <= limit => acc = v,
                        _ => {
                            overflow = true;
                            break 'rows;
                        }
                    }
                }
                next[i][j] = acc;
            }
        }
        if overflow {
            return modular_scan(g, &walks, k);
        }
        walks = next;
        let first = walks[0][0];
        if (1..n).any(|i| walks[i][i] != first) {
            return WalkRegularity {
                walk_regular: false,
                failure_k: Some(k),
                arithmetic: WalkArithmetic::Exact,
            };
        }
    }
    WalkRegularity {
        walk_regular: true,
        failure_k: None,
        arithmetic: WalkArithmetic::Exact,
    }
}

/// Continues the scan from power `from_k` with residues modulo both primes,
/// starting from the exact `(from_k - 1)`-walk counts.
fn modular_scan(g: &Graph, exact: &[Vec<i128>], from_k: usize) -> WalkRegularity {
    let n = g.n();
    let mut residues: Vec<Vec<Vec<u64>>> = WALK_PRIMES
        .iter()
        .map(|&p| {
            exact
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| (x.rem_euclid(p as i128)) as u64)
                        .collect()
                })
                .collect()
        })
        .collect();
    let arithmetic = WalkArithmetic::Modular { from_k };

    for k in from_k..=n {
        for (walks, &p) in residues.iter_mut().zip(&WALK_PRIMES) {
            let mut next = vec![vec![0u64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    next[i][j] = g
                        .neighbors(j)
                        .iter()
                        .fold(0u64, |acc, &l| (acc + walks[i][l]) % p);
                }
            }
            *walks = next;
        }
        let differs = residues
            .iter()
            .any(|walks| (1..n).any(|i| walks[i][i] != walks[0][0]));
        if differs {
            return WalkRegularity {
                walk_regular: false,
                failure_k: Some(k),
                arithmetic,
            };
        }
    }
    WalkRegularity {
        walk_regular: true,
        failure_k: None,
        arithmetic,
    }
}

/// Regularity, walk-regularity and resistance-regular vertices together.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrySurvey {
    pub regular: Option<usize>,
    pub walk: WalkRegularity,
    pub resistance_regular_vertices: Vec<usize>,
}

pub fn survey(g: &Graph) -> Result<SymmetrySurvey> {
    let walk = walk_regularity(g)?;
    let r = resistance_matrix(g)?;
    Ok(SymmetrySurvey {
        regular: g.regular_degree(),
        walk,
        resistance_regular_vertices: resistance_regular_vertices(g, &r),
    })
}

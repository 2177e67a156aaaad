//! Random-walk and electrical invariants of simple connected graphs.
//!
//! The crate computes hitting times, effective resistances, the Kirchhoff
//! index and Kemeny's constant, each by at least two independent routes, and
//! builds on them:
//!
//! * [`graph`]: representation, standard families, the cluster construction
//!   `G1{G2}` and structural analysis (bridges, cut vertices, diameter).
//! * [`spectra`]: dense numeric kernels (walk spectrum, Laplacian
//!   pseudoinverse, linear solves).
//! * [`invariants`]: stationary distribution, hitting matrices, resistance
//!   matrix, Kemeny's constant, Monte Carlo hitting estimates.
//! * [`symmetry`]: the hitting-time symmetry test, walk-regularity, and the
//!   cut-vertex / cut-edge screener.
//! * [`formulas`]: closed forms for clusters and the spectral bounds on
//!   Kemeny's constant, each paired with an exact comparison.

// Matrix code reads better with explicit (i, j) loops.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod spectra;
pub mod symmetry;
pub mod tol;

pub use error::{Error, Result};
pub use graph::{
    cluster::{cluster, Cluster, ClusterSpec, VertexRole},
    edgelist,
    generators::{generate, Family},
    structure::{structure, Bridge, StructureReport},
    Graph,
};
pub use invariants::{
    hitting_matrix_resistance, hitting_matrix_solve, kemeny, kemeny_routes, resistance_matrix,
    simulate_hitting, stationary, HittingEstimate, HittingMatrix, KemenyResult, ResistanceMatrix,
    StationaryDistribution,
};
pub use spectra::{laplacian_pinv, solve_linear, walk_spectrum, Spectrum};
pub use symmetry::{
    check_return_time_identity, is_highly_symmetric, resistance_regular_vertices,
    screen_necessary_conditions, survey, walk_regularity, HsReport, ScreenRule, SymmetrySurvey,
    Verdict, WalkRegularity, Witness,
};

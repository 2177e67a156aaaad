//! Tolerances shared by the numeric checks.
//!
//! Comparisons are of the form `|x - y| <= tol * (1 + |y|)` unless a function
//! says otherwise; see [`close`].

/// Structural identities (stationarity, spectrum range, pseudoinverse contracts).
pub const STRUCTURAL: f64 = 1e-9;

/// Agreement between two independent routes to the same invariant.
pub const CROSS_ROUTE: f64 = 1e-8;

/// Hitting-time routes and the hitting-symmetry test; hitting times grow like n^3.
pub const HITTING: f64 = 1e-7;

/// Entries of the pseudoinverse spectrum below `PINV_CUTOFF * lambda_max` are zero.
pub const PINV_CUTOFF: f64 = 1e-10;

/// Equality of neighbour resistances at a resistance-regular vertex.
pub const RESISTANCE_REGULAR: f64 = 1e-9;

/// Smallest tolerance the command line accepts.
pub const FLOOR: f64 = 1e-12;

/// `|actual - expected| <= tol * (1 + |expected|)`.
pub fn close(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol * (1.0 + expected.abs())
}

/// Relative deviation `|actual - expected| / |expected|`, or the absolute
/// deviation when `expected` is zero.
pub fn rel_dev(actual: f64, expected: f64) -> f64 {
    let diff = (actual - expected).abs();
    if expected == 0.0 {
        diff
    } else {
        diff / expected.abs()
    }
}

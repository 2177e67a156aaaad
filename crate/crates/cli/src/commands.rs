use std::path::Path;

use hitsym_core::formulas::{self, UpperEigen};
use hitsym_core::symmetry::WalkArithmetic;
use hitsym_core::{
    cluster as build_cluster, edgelist, hitting_matrix_resistance, hitting_matrix_solve,
    kemeny_routes, resistance_matrix, screen_necessary_conditions, simulate_hitting, stationary,
    survey, tol, walk_spectrum, ClusterSpec, Error, Graph, HsReport, Witness,
};

use crate::report::{float, floats, Report};
use crate::{Mode, Select};

/// A failed command: exit code, a short machine-readable kind and the message.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::SelfLoop { .. } => (1, "self_loop"),
            Error::VertexOutOfRange { .. } => (1, "vertex_out_of_range"),
            Error::UnknownFamily(_) => (1, "unknown_family"),
            Error::BadParams { .. } => (1, "bad_params"),
            Error::InvalidArgument(_) => (1, "invalid_argument"),
            Error::Parse { .. } => (1, "parse"),
            Error::Disconnected { .. } => (2, "disconnected"),
            Error::TooSmall { .. } => (2, "too_small"),
            Error::NotRegular { .. } => (2, "not_regular"),
            Error::NotHighlySymmetric { .. } => (2, "not_highly_symmetric"),
            Error::Singular { .. } => (3, "singular"),
            Error::EigenFailure { .. } => (3, "eigen_failure"),
            Error::InvariantViolation(_) => (4, "invariant_violation"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        kind: "io",
        message: format!("{}: {e}", path.display()),
    }
}

fn violation(message: String) -> Failure {
    Error::InvariantViolation(message).into()
}

/// Reads and parses an edge list, recording its fingerprint under `label`.
fn load(report: &mut Report, label: &str, path: &Path) -> Result<Graph, Failure> {
    let bytes = std::fs::read(path).map_err(|e| io_failure(path, e))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
        code: 1,
        kind: "parse",
        message: format!("{}: not valid UTF-8", path.display()),
    })?;
    let g = edgelist::parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    report.graph_input(label, &path.display().to_string(), &bytes, &g);
    Ok(g)
}

fn load_connected(report: &mut Report, path: &Path) -> Result<Graph, Failure> {
    let g = load(report, "graph", path)?;
    g.require_connected()?;
    Ok(g)
}

fn write_graph(report: &mut Report, g: &Graph, out: &Path) -> Outcome {
    let text = edgelist::write(g);
    std::fs::write(out, &text).map_err(|e| io_failure(out, e))?;
    report.graph_input("output", &out.display().to_string(), text.as_bytes(), g);
    Ok(())
}

pub fn gen(report: &mut Report, family: &str, params: &[usize], out: &Path) -> Outcome {
    let g = hitsym_core::generate(family, params)?;
    report.input("family", family);
    report.input(
        "params",
        params
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    write_graph(report, &g, out)?;
    report.result("n", g.n());
    report.result("m", g.m());
    report.result("connected", g.is_connected());
    Ok(())
}

fn matrix_rows(report: &mut Report, prefix: &str, n: usize, entry: impl Fn(usize, usize) -> f64) {
    for i in 0..n {
        let row: Vec<f64> = (0..n).map(|j| entry(i, j)).collect();
        report.result(format!("{prefix}.row.{i}"), floats(&row));
    }
}

pub fn compute(
    report: &mut Report,
    path: &Path,
    select: &[Select],
    tol_override: Option<f64>,
) -> Outcome {
    let g = load_connected(report, path)?;
    let all = select.contains(&Select::All);
    let wants = |s: Select| all || select.contains(&s);
    let n = g.n();

    if wants(Select::Stationary) {
        let pi = stationary(&g)?;
        report.result("stationary", floats(&pi.pi));
    }
    if wants(Select::Spectrum) {
        let spectrum = walk_spectrum(&g)?;
        report.result("spectrum", floats(&spectrum.eigenvalues));
    }
    if wants(Select::Kemeny) {
        let t = tol_override.unwrap_or(tol::CROSS_ROUTE);
        let k = kemeny_routes(&g)?;
        report.result_f64("kemeny", k.k_eigen);
        report.diagnostic_f64("kemeny.eigen_route", k.k_eigen);
        report.diagnostic_f64("kemeny.hitting_route", k.k_hitting);
        report.diagnostic_f64("kemeny.route_rel_dev", tol::rel_dev(k.k_hitting, k.k_eigen));
        report.diagnostic_f64("kemeny.max_start_spread", k.max_start_spread);
        report.diagnostic_f64("kemeny.tolerance", t);
        k.verify(t)?;
    }
    let needs_resistance =
        wants(Select::Kirchhoff) || wants(Select::Resistance) || wants(Select::Hitting);
    let r = if needs_resistance {
        Some(resistance_matrix(&g)?)
    } else {
        None
    };
    if let (true, Some(r)) = (wants(Select::Kirchhoff), &r) {
        let t = tol_override.unwrap_or(tol::CROSS_ROUTE);
        report.result_f64("kirchhoff", r.kirchhoff);
        report.diagnostic_f64("kirchhoff.pair_sum", r.kirchhoff);
        report.diagnostic_f64("kirchhoff.trace_route", r.kirchhoff_trace);
        report.diagnostic_f64(
            "kirchhoff.route_rel_dev",
            tol::rel_dev(r.kirchhoff_trace, r.kirchhoff),
        );
        if !tol::close(r.kirchhoff_trace, r.kirchhoff, t) {
            return Err(violation(format!(
                "Kirchhoff routes disagree: pairwise sum {} vs n tr(L+) {}",
                r.kirchhoff, r.kirchhoff_trace
            )));
        }
        let s = formulas::sandwich(&g)?;
        report.diagnostic_f64("kirchhoff.sandwich_lower", s.lower);
        report.diagnostic_f64("kirchhoff.sandwich_upper", s.upper);
        if !s.holds(t) {
            return Err(violation(format!(
                "(n/max deg) K <= R(G) <= (n/min deg) K fails: {} <= {} <= {}",
                s.lower, s.value, s.upper
            )));
        }
    }
    if let (true, Some(r)) = (wants(Select::Resistance), &r) {
        matrix_rows(report, "resistance", n, |i, j| r.get(i, j));
    }
    if let (true, Some(r)) = (wants(Select::Hitting), &r) {
        let t = tol_override.unwrap_or(tol::HITTING);
        let h = hitting_matrix_solve(&g)?;
        let via_r = hitting_matrix_resistance(&g, r);
        matrix_rows(report, "hitting", n, |i, j| h.get(i, j));
        let largest = h.h.iter().fold(0.0f64, |acc, &x| acc.max(x));
        let diff = h.max_abs_diff(&via_r);
        report.diagnostic_f64("hitting.resistance_route_max_abs_diff", diff);
        if diff > t * (1.0 + largest) {
            return Err(violation(format!(
                "hitting times from the linear solve and from resistances differ by {diff:e}"
            )));
        }
    }
    Ok(())
}

fn witness_text(w: &Witness) -> String {
    match *w {
        Witness::HittingPair {
            a,
            b,
            forward,
            backward,
        } => format!(
            "pair {a} {b} forward {} backward {}",
            float(forward),
            float(backward)
        ),
        Witness::Vertex { vertex, .. } => format!("vertex {vertex}"),
        Witness::Edge { u, v, sides, .. } => format!("edge {u} {v} sides {} {}", sides.0, sides.1),
    }
}

fn verdict_text(rep: &HsReport) -> &'static str {
    if rep.is_highly_symmetric() {
        "HighlySymmetric"
    } else {
        "NotHighlySymmetric"
    }
}

pub fn check_hs(
    report: &mut Report,
    path: &Path,
    mode: Mode,
    tol_override: Option<f64>,
) -> Outcome {
    let g = load_connected(report, path)?;
    report.input(
        "mode",
        match mode {
            Mode::Screen => "screen",
            Mode::Full => "full",
        },
    );

    let screen = screen_necessary_conditions(&g)?;
    let rule = screen.rule().map_or("none", |r| r.id());
    if mode == Mode::Screen {
        report.result("verdict", verdict_text(&screen));
        report.result("rule", rule);
        if let Some(w) = &screen.witness {
            report.result("witness", witness_text(w));
        }
        return Ok(());
    }

    let t = tol_override.unwrap_or(tol::HITTING);
    let direct = hitsym_core::symmetry::is_highly_symmetric_with(&g, t)?;
    report.result("verdict", verdict_text(&direct));
    if let Some(w) = &direct.witness {
        report.result("witness", witness_text(w));
    }
    report.diagnostic("screen.verdict", verdict_text(&screen));
    report.diagnostic("screen.rule", rule);
    if let Some(w) = &screen.witness {
        report.diagnostic("screen.witness", witness_text(w));
    }
    if let Some(gap) = direct.max_asymmetry {
        report.diagnostic_f64("direct.max_asymmetry", gap);
    }
    report.diagnostic_f64("direct.tolerance", t);
    if let Some(x) = &direct.extras {
        report.diagnostic_f64("direct.hitting_vs_m_resistance", x.hitting_vs_resistance);
        report.diagnostic_f64("direct.resistance_row_sum_spread", x.row_sum_spread);
        report.diagnostic_f64("direct.kirchhoff_vs_row_sum", x.kirchhoff_vs_row_sum);
    }
    let s = survey(&g)?;
    report.diagnostic(
        "regular_degree",
        s.regular.map_or("none".to_string(), |d| d.to_string()),
    );
    report.diagnostic("walk_regular", s.walk.walk_regular);
    if let Some(k) = s.walk.failure_k {
        report.diagnostic("walk_regular.failure_k", k);
    }
    match s.walk.arithmetic {
        WalkArithmetic::Exact => report.diagnostic("walk_regular.arithmetic", "exact"),
        WalkArithmetic::Modular { from_k } => {
            report.diagnostic("walk_regular.arithmetic", "modular");
            report.diagnostic("walk_regular.modular_from_k", from_k);
        }
    }

    if direct.is_highly_symmetric() && !screen.is_highly_symmetric() {
        return Err(violation(format!(
            "necessary condition rule {rule} rejects a graph whose hitting times are symmetric"
        )));
    }
    if s.walk.walk_regular && !direct.is_highly_symmetric() {
        return Err(violation(
            "walk-regular graph with asymmetric hitting times".into(),
        ));
    }
    Ok(())
}

pub fn cluster(
    report: &mut Report,
    g1_path: &Path,
    g2_path: &Path,
    root: usize,
    out: &Path,
) -> Outcome {
    let g1 = load(report, "g1", g1_path)?;
    let g2 = load(report, "g2", g2_path)?;
    report.input("root", root);
    let (n1, m1, n2, m2) = (g1.n(), g1.m(), g2.n(), g2.m());
    let c = build_cluster(&ClusterSpec { g1, g2, root })?;
    let g = &c.graph;
    if g.n() != n1 * n2 || g.m() != m1 + n1 * m2 {
        return Err(violation(format!(
            "cluster has {} vertices and {} edges, expected {} and {}",
            g.n(),
            g.m(),
            n1 * n2,
            m1 + n1 * m2
        )));
    }
    write_graph(report, g, out)?;
    report.result("n", g.n());
    report.result("m", g.m());
    report.result("backbone", format!("0..{n1}"));
    Ok(())
}

pub fn verify_cluster(
    report: &mut Report,
    g1_path: &Path,
    g2_path: &Path,
    root: usize,
    tol_override: Option<f64>,
) -> Outcome {
    let g1 = load(report, "g1", g1_path)?;
    let g2 = load(report, "g2", g2_path)?;
    report.input("root", root);
    let rep = formulas::verify_cluster(&g1, &g2, root)?;
    let t = tol_override.unwrap_or(tol::CROSS_ROUTE);

    report.result("n1", rep.n1);
    report.result("n2", rep.n2);
    report.result("m1", rep.m1);
    report.result("m2", rep.m2);
    report.result("m", rep.m);
    report.result_f64("k1", rep.k1);
    report.result_f64("k2", rep.k2);
    report.result_f64("r1", rep.r1);
    report.result_f64("r2", rep.r2);
    report.result_f64("k_exact", rep.k_exact);
    report.result_f64("r_exact", rep.r_exact);
    let rows = rep.rows();
    for row in &rows {
        report.result_f64(format!("{}.predicted", row.name), row.predicted);
        report.result_f64(format!("{}.rel_dev", row.name), row.rel_dev);
    }
    report.diagnostic_f64("tolerance", t);
    for row in &rows {
        report.diagnostic(format!("{}.within_tolerance", row.name), row.rel_dev <= t);
    }
    report.diagnostic_f64("contact_hitting_max_rel_dev", rep.eq9_max_dev);
    report.diagnostic("self_cluster", rep.self_cluster.is_some());
    Ok(())
}

pub fn bounds(report: &mut Report, path: &Path, tol_override: Option<f64>) -> Outcome {
    let g = load_connected(report, path)?;
    let t = tol_override.unwrap_or(tol::CROSS_ROUTE);
    let b = formulas::bounds(&g)?;
    report.result_f64("kemeny", b.k_actual);
    let tight = |v: f64| tol::close(v, b.k_actual, t);
    for (name, v) in b.lower_bounds() {
        report.result_f64(format!("{name}.value"), v);
        report.result(format!("{name}.tight"), tight(v));
    }
    match b.upper_eigen {
        UpperEigen::Applicable { value, k, theta } => {
            report.result_f64("upper_eigen.value", value);
            report.result("upper_eigen.tight", tight(value));
            report.diagnostic("upper_eigen.k", k);
            report.diagnostic_f64("upper_eigen.theta", theta);
        }
        UpperEigen::Inapplicable { reason } => {
            report.result("upper_eigen.value", "inapplicable");
            report.diagnostic("upper_eigen.reason", reason);
        }
    }
    let s = formulas::sandwich(&g)?;
    report.result_f64("kirchhoff", s.value);
    report.result_f64("kirchhoff.lower", s.lower);
    report.result_f64("kirchhoff.upper", s.upper);
    report.diagnostic_f64("lambda2", b.lambda2);
    report.diagnostic_f64("sigma", b.sigma);
    report.diagnostic("diameter", b.diameter);
    report.diagnostic("bipartite", b.lower_bipartite.is_some());
    report.diagnostic_f64("tolerance", t);

    let mut broken = b.violations(t);
    if !s.holds(t) {
        broken.push(format!(
            "(n/max deg) K <= R(G) <= (n/min deg) K fails: {} <= {} <= {}",
            s.lower, s.value, s.upper
        ));
    }
    if !broken.is_empty() {
        return Err(violation(broken.join("; ")));
    }
    Ok(())
}

pub fn simulate(
    report: &mut Report,
    path: &Path,
    from: usize,
    to: usize,
    trials: u64,
    seed: u64,
) -> Outcome {
    let g = load_connected(report, path)?;
    report.input("from", from);
    report.input("to", to);
    report.input("trials", trials);
    report.input("seed", seed);
    let est = simulate_hitting(&g, from, to, trials, seed)?;
    report.result_f64("mean", est.mean);
    report.result_f64("stderr", est.stderr);
    report.result("trials", est.trials);
    report.result("capped_trials", est.capped_trials);
    let exact = hitting_matrix_solve(&g)?.get(from, to);
    report.diagnostic_f64("exact", exact);
    if est.stderr > 0.0 {
        report.diagnostic_f64("z_score", (est.mean - exact) / est.stderr);
    }
    Ok(())
}
